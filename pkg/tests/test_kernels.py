"""Pins the two kernel backends to each other and to the definitional
predicates in the separation module."""

import numpy as np
import pytest

from fintop.core import up_rows
from fintop.separation import axiom_profile
from fintop.kernels import jit, pure
from conftest import all_spaces


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_backends_emit_identical_matrices(n):
    assert np.array_equal(jit.preorder_matrices(n), pure.preorder_matrices(n))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_backends_emit_identical_signature_counts(n):
    assert np.array_equal(jit.signature_counts(n), pure.signature_counts(n))


@pytest.mark.parametrize("n", [3, 4])
def test_prefix_split_covers_full_search(n):
    whole = pure.signature_counts(n)
    split = sum(
        pure.signature_counts(n, sum(b << (k + 1) for k, b in enumerate(bits)))
        for bits in __import__("itertools").product((0, 1), repeat=n - 1)
    )
    assert np.array_equal(whole, split)


@pytest.mark.parametrize("backend", [jit, pure])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_kernel_signatures_match_definitional_profiles(backend, n):
    for s in all_spaces(n):
        sig = axiom_profile(s).signature()
        assert backend.signature_of_rows(n, up_rows(s)) == sig


def test_known_preorder_counts():
    for n, count in [(1, 1), (2, 4), (3, 29), (4, 355), (5, 6942), (6, 209527)]:
        assert int(jit.signature_counts(n).sum()) == count
