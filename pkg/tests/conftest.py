from __future__ import annotations

import warnings

import pytest

from antichains.lattice import all_antichains

warnings.filterwarnings("ignore", module="numba")

# published values of |A_n|, |B_n|, |C_n|, |D_n| for n = 0..8
KNOWN = {
    0: (2, 2, 2, 2),
    1: (3, 1, 1, 1),
    2: (6, 2, 1, 1),
    3: (20, 9, 5, 5),
    4: (168, 114, 84, 76),
    5: (7581, 6894, 6348, 5993),
    6: (7828354, 7785062, 7743728, 7689745),
    7: (2414682040998, 2414627396434, 2414572893530, 2414465044600),
    8: (
        56130437228687557907788,
        56130437209370320359966,
        56130437190053299918162,
        56130437141763247212112,
    ),
}


@pytest.fixture(scope="session")
def a3():
    return all_antichains(3)


@pytest.fixture(scope="session")
def a4():
    return all_antichains(4)
