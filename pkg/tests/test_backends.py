"""Compiled and pure-Python kernel backends must agree bit for bit."""

import random
from itertools import product

import pytest

from ivhfss import _kernels_py as py

cy = pytest.importorskip("ivhfss._ckernels", reason="compiled backend not built")


def grid(step=0.25):
    n = round(1 / step)
    pts = [round(i * step, 12) for i in range(n + 1)]
    return [(lo, up) for lo in pts for up in pts if lo <= up]


def random_elements(count, max_size=3, seed=13):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pairs = []
        for _ in range(rng.randint(1, max_size)):
            a, b = sorted((rng.random(), rng.random()))
            pairs.append((a, b))
        out.append(py.sort_element(pairs))
    return out


class TestScalarKernels:
    def test_interval_kernels_identical_on_grid(self):
        for (al, au), (bl, bu) in product(grid(), repeat=2):
            assert py.possibility_ge(al, au, bl, bu) == cy.possibility_ge(al, au, bl, bu)
            assert py.join_kernel(al, au, bl, bu) == cy.join_kernel(al, au, bl, bu)
            assert py.meet_kernel(al, au, bl, bu) == cy.meet_kernel(al, au, bl, bu)
            assert py.ring_sum_kernel(al, au, bl, bu) == cy.ring_sum_kernel(al, au, bl, bu)
            assert py.ring_product_kernel(al, au, bl, bu) == cy.ring_product_kernel(al, au, bl, bu)
            for kind in ("O1", "O2", "O3", "O4"):
                assert py.operator_kernel(kind, al, au, bl, bu) == cy.operator_kernel(
                    kind, al, au, bl, bu
                )
                assert py.operator_kernel_raw(kind, al, au, bl, bu) == cy.operator_kernel_raw(
                    kind, al, au, bl, bu
                )

    def test_scalar_kernels_identical_random(self):
        rng = random.Random(5)
        for _ in range(20000):
            a, b = rng.random(), rng.random()
            assert py.star_kernel(a, b) == cy.star_kernel(a, b)
            assert py.rank_key(min(a, b), max(a, b)) == cy.rank_key(min(a, b), max(a, b))
            assert py.complement_kernel(min(a, b), max(a, b)) == cy.complement_kernel(
                min(a, b), max(a, b)
            )


class TestElementKernels:
    def test_element_ops_identical(self):
        elems = random_elements(300)
        rng = random.Random(23)
        for _ in range(2000):
            e1 = rng.choice(elems)
            e2 = rng.choice(elems)
            assert py.sort_element(e1) == cy.sort_element(e1)
            assert py.dedup_element(e1 + e2) == cy.dedup_element(e1 + e2)
            for union in (True, False):
                assert py.combine_aligned(union, e1, e2, True) == cy.combine_aligned(
                    union, e1, e2, True
                )
                assert py.combine_aligned(union, e1, e2, False) == cy.combine_aligned(
                    union, e1, e2, False
                )
                assert py.combine_pairwise(union, e1, e2) == cy.combine_pairwise(union, e1, e2)
                assert py.zip_combine(union, e1, e2, True) == cy.zip_combine(union, e1, e2, True)
            assert py.complement_element(e1) == cy.complement_element(e1)
            assert py.ring_sum_element(e1, e2) == cy.ring_sum_element(e1, e2)
            assert py.ring_product_element(e1, e2) == cy.ring_product_element(e1, e2)
            for kind in ("O1", "O2", "O3", "O4"):
                assert py.operator_element(kind, e1, e2) == cy.operator_element(kind, e1, e2)
            assert py.score_element(e1) == cy.score_element(e1)
            n = max(len(e1), len(e2))
            assert py.extend_element(e1, n, True) == cy.extend_element(e1, n, True)
            assert py.extend_element(e1, n, False) == cy.extend_element(e1, n, False)
