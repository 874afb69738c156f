from contextlib import contextmanager
from itertools import combinations

import numpy as np

from ternary_codes import utils
from ternary_codes.functions import Family, make
from ternary_codes.gf3 import vector_table


@contextmanager
def reset_budget():
    budget, jobs = dict(utils._budget), utils._default_jobs
    try:
        yield
    finally:
        utils._budget.update(budget)
        utils._default_jobs = jobs


def family_instances(m, k_max=None):
    top = (m - 1) // 2 if k_max is None else min(k_max, (m - 1) // 2)
    instances = []
    for k in range(2, top + 1):
        instances.append(make(Family.G, m, k))
        instances.append(make(Family.GBAR, m, k))
        for size in range(1, k + 1):
            for S in combinations(range(1, k + 1), size):
                instances.append(make(Family.F, m, k, S))
    return instances


def codeword(G, u, v_index):
    m = G.shape[0] - 1
    coefficients = np.array([u, *vector_table(m)[v_index]], dtype=np.int64)
    return coefficients @ G.astype(np.int64) % 3


GOLDEN_DISTRIBUTION = {
    0: 1,
    13010: 36,
    13052: 288,
    13085: 1344,
    13094: 1024,
    13109: 4032,
    13115: 4608,
    13122: 19682,
    13124: 8064,
    13127: 9216,
    13130: 10752,
    19520: 2,
}

GOLDEN_POLYNOMIAL = (
    "1+36z^13010+288z^13052+1344z^13085+1024z^13094+4032z^13109+4608z^13115"
    "+19682z^13122+8064z^13124+9216z^13127+10752z^13130+2z^19520"
)
