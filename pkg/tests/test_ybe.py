"""Yang-Baxter solutions: construction, braid relation, properties."""

import numpy as np
import pytest

from braceforge.algebra import Kind, group_spec
from braceforge.brace import ker_lambda
from braceforge.catalog import cyclic_semidirect_brace, q1p_mixed_Bs, trivial_brace
from braceforge.ybe import (
    Solution,
    flip_solution,
    sigma_group_order,
    solution_from_brace,
    solution_properties,
    verify_ybe,
)

from helpers import catalog


def test_trivial_brace_gives_the_flip():
    spec = group_spec(3, 2, Kind.CYCLIC)
    sol = solution_from_brace(trivial_brace(spec))
    assert sol == flip_solution(spec.n)
    assert sol.r(5, 11) == (11, 5)
    assert verify_ybe(sol).ok
    assert solution_properties(sol) == {"nondegenerate": True, "involutive": True}
    assert sigma_group_order(sol) == 1


def test_semidirect_brace_solution_18_cubed():
    sol = solution_from_brace(cyclic_semidirect_brace(3, 2))
    assert verify_ybe(sol).ok  # checks all 18^3 triples
    assert solution_properties(sol) == {"nondegenerate": True, "involutive": True}


def test_bw_brace_solution_63_cubed():
    sol = solution_from_brace(q1p_mixed_Bs(3, 7, 2))
    assert verify_ybe(sol).ok  # checks all 63^3 triples
    assert solution_properties(sol) == {"nondegenerate": True, "involutive": True}


@pytest.mark.parametrize("pair", [(3, 2), (2, 7), (3, 7)], ids=str)
def test_catalog_solutions_all_pass(pair):
    for e in catalog(*pair):
        B = e.brace
        sol = solution_from_brace(B)
        assert verify_ybe(sol).ok, e.family
        assert solution_properties(sol) == {
            "nondegenerate": True,
            "involutive": True,
        }, e.family
        # |<sigma_x>| = |lambda(A)| = |A| / |ker lambda|
        assert sigma_group_order(sol) == B.spec.n // len(ker_lambda(B)), e.family


def test_corrupted_sigma_fails_with_witness():
    sol = solution_from_brace(cyclic_semidirect_brace(3, 2))
    sigma = sol.sigma.copy()
    sigma[2, [0, 1]] = sigma[2, [1, 0]]
    res = verify_ybe(Solution(sigma, sol.tau))
    assert not res.ok
    assert "braid relation fails at" in res.problems[0]


def test_solution_validation():
    with pytest.raises(ValueError):
        Solution(np.zeros((2, 3), dtype=int), np.zeros((2, 3), dtype=int))
    with pytest.raises(ValueError):
        Solution([[0, 1], [1, 0]], [[0, 2], [1, 0]])  # entry out of range
    # a degenerate "solution" is detected
    const = np.zeros((3, 3), dtype=int)
    props = solution_properties(Solution(const, const))
    assert props["nondegenerate"] is False


def test_non_solution_fails_braid():
    # sigma_x = x-th power of a 3-cycle, tau = identity: not a YBE solution
    n = 3
    cyc = np.array([1, 2, 0])
    sigma = np.stack([np.arange(n), cyc, cyc[cyc]])
    tau = np.tile(np.arange(n), (n, 1))
    assert not verify_ybe(Solution(sigma, tau)).ok
