"""Raw-value evaluation layer for law checking.

Law checking runs millions of small operations, so this layer works on plain
tuples (elements are tuples of (lower, upper) pairs, soft sets are a small
dataclass of dicts) and calls the same backend kernels the public API wraps.
The public object API is used only to replay reported counterexamples.

Three evaluation regimes appear here:

* ``aligned`` / ``pairwise`` mirror the public combine modes exactly.
* ``sequence`` evaluates a whole expression with one alignment pass and no
  re-sorting between steps, the way chained decision tables are computed in
  practice; re-canonicalizing between steps scrambles index pairing and
  makes associativity/distributivity fail spuriously.
* ``synchronized`` pairs both sides of the difference-operator identities
  over the single (gamma1, gamma2) index set they quantify over.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..backend import kernels

Element = tuple  # tuple of (lower, upper) pairs
_ek = kernels


@dataclass
class RawSoft:
    """Lean soft set: parameter tuple, universe tuple, (param, obj) -> element."""

    params: tuple[str, ...]
    universe: tuple[str, ...]
    cells: dict[tuple[str, str], Element]

    def cell(self, e: str, h: str) -> Element:
        return self.cells[(e, h)]


# --- element comparisons (tolerance-aware) ---


def elements_strict_equal(a: Element, b: Element, tol: float) -> bool:
    if len(a) != len(b):
        return False
    sa = _ek.sort_element(a)
    sb = _ek.sort_element(b)
    return all(
        abs(x[0] - y[0]) <= tol and abs(x[1] - y[1]) <= tol for x, y in zip(sa, sb)
    )


def elements_equivalent(a: Element, b: Element, tol: float) -> bool:
    da = _ek.dedup_element(a)
    db = _ek.dedup_element(b)
    if len(da) != len(db):
        return False
    return all(
        abs(x[0] - y[0]) <= tol and abs(x[1] - y[1]) <= tol for x, y in zip(da, db)
    )


def element_leq(a: Element, b: Element, tol: float) -> bool:
    """k-th-wise componentwise <= after optimistic alignment."""
    n = max(len(a), len(b))
    ea = _ek.extend_element(_ek.sort_element(a), n, True)
    eb = _ek.extend_element(_ek.sort_element(b), n, True)
    return all(
        x[0] <= y[0] + tol and x[1] <= y[1] + tol for x, y in zip(ea, eb)
    )


# --- raw soft operations (numerically identical to the public ones) ---


def soft_union(f: RawSoft, g: RawSoft, mode: str) -> RawSoft:
    fset, gset = set(f.params), set(g.params)
    params = f.params + tuple(e for e in g.params if e not in fset)
    cells = {}
    for e in params:
        for h in f.universe:
            if e in fset and e in gset:
                cells[(e, h)] = _combine(True, f.cell(e, h), g.cell(e, h), mode)
            elif e in fset:
                cells[(e, h)] = f.cell(e, h)
            else:
                cells[(e, h)] = g.cell(e, h)
    return RawSoft(params, f.universe, cells)


def soft_intersection(f: RawSoft, g: RawSoft, mode: str) -> RawSoft:
    gset = set(g.params)
    params = tuple(e for e in f.params if e in gset)
    if not params:
        raise ValueError("empty parameter intersection")
    cells = {
        (e, h): _combine(False, f.cell(e, h), g.cell(e, h), mode)
        for e in params
        for h in f.universe
    }
    return RawSoft(params, f.universe, cells)


def _combine(union: bool, a: Element, b: Element, mode: str) -> Element:
    if mode == "aligned":
        return _ek.combine_aligned(union, a, b, True)
    if mode == "pairwise":
        return _ek.combine_pairwise(union, a, b)
    # sequence: positional, padded, not re-sorted
    return _ek.zip_combine(union, a, b, True)


def soft_complement(f: RawSoft) -> RawSoft:
    return RawSoft(
        f.params,
        f.universe,
        {k: _ek.complement_element(v) for k, v in f.cells.items()},
    )


def soft_strict_equal(f: RawSoft, g: RawSoft, tol: float) -> bool:
    if set(f.params) != set(g.params):
        return False
    return all(
        elements_strict_equal(f.cell(e, h), g.cell(e, h), tol)
        for e in f.params
        for h in f.universe
    )


def soft_equivalent(f: RawSoft, g: RawSoft, tol: float) -> bool:
    if set(f.params) != set(g.params):
        return False
    return all(
        elements_equivalent(f.cell(e, h), g.cell(e, h), tol)
        for e in f.params
        for h in f.universe
    )


def soft_subset(f: RawSoft, g: RawSoft, tol: float) -> bool:
    if not set(f.params) <= set(g.params):
        return False
    return all(
        element_leq(f.cell(e, h), g.cell(e, h), tol)
        for e in f.params
        for h in f.universe
    )


def constant_like(f: RawSoft, value: tuple[float, float]) -> RawSoft:
    cells = {(e, h): (value,) for e in f.params for h in f.universe}
    return RawSoft(f.params, f.universe, cells)


# --- synchronized element expressions for the O-operator identities ---


def sync_pairs(kind: str, which: str, e1: Element, e2: Element):
    """Per-pair (ring value, O value) tuples over gamma1 x gamma2."""
    ring = _ek.ring_sum_kernel if which == "sum" else _ek.ring_product_kernel
    out = []
    for x in e1:
        for y in e2:
            s = ring(x[0], x[1], y[0], y[1])
            o = _ek.operator_kernel(kind, x[0], x[1], y[0], y[1])
            out.append((s, o))
    return out


def sync_meet_side(kind: str, which: str, e1: Element, e2: Element) -> Element:
    return _ek.dedup_element(
        [_ek.meet_kernel(s[0], s[1], o[0], o[1]) for s, o in sync_pairs(kind, which, e1, e2)]
    )


def sync_join_side(kind: str, which: str, e1: Element, e2: Element) -> Element:
    return _ek.dedup_element(
        [_ek.join_kernel(s[0], s[1], o[0], o[1]) for s, o in sync_pairs(kind, which, e1, e2)]
    )


def ring_result(which: str, e1: Element, e2: Element) -> Element:
    if which == "sum":
        return _ek.ring_sum_element(e1, e2)
    return _ek.ring_product_element(e1, e2)


def operator_result(kind: str, e1: Element, e2: Element) -> Element:
    return _ek.operator_element(kind, e1, e2)
