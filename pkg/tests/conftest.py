import numpy as np
import pytest

from grasscode.constructions import extraspecial_code, mub_code, pauli_code
from grasscode.core_linalg import Code, Subspace, haar_basis_batch


@pytest.fixture(scope="session")
def pauli2():
    return pauli_code(2)


@pytest.fixture(scope="session")
def mub5():
    return mub_code(5)


@pytest.fixture(scope="session")
def es321():
    return extraspecial_code(3, 2, 1)


@pytest.fixture(scope="session")
def es320():
    return extraspecial_code(3, 2, 0)


def random_code(n, m, N, seed):
    "N independent Haar subspaces as a Code (duplicates astronomically unlikely)"
    B = haar_basis_batch(n, m, N, seed=seed)
    return Code([Subspace(b) for b in B], check_duplicates=False)


def random_subspace_pair(n, m, rng):
    from grasscode.core_linalg import subspace_from_basis
    a = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    b = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return subspace_from_basis(a), subspace_from_basis(b)
