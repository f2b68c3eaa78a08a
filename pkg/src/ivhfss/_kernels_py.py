"""Pure-Python scalar and element kernels.

This is the reference backend.  A Cython build of the same functions lives in
``_ckernels.pyx``; :mod:`ivhfss.backend` picks whichever is importable.  Both
implementations must stay bit-for-bit identical: every formula is written the
same way so IEEE arithmetic agrees.

Intervals are plain ``(lower, upper)`` float tuples, elements are tuples of
intervals.  Higher layers wrap these in richer types; the law-check inner
loops call straight into this module.
"""

from __future__ import annotations

BACKEND = "python"

# Midpoints are quantized to 12 decimals before ordering so that decimal data
# ties exactly (0.4+0.8 and 0.5+0.7 differ by 2e-16 in IEEE arithmetic but
# must rank as a tie, broken by the lower endpoint).
_MID_DECIMALS = 12


def rank_key(lo, up):
    """Total-order sort key: quantized midpoint, then lower, then upper."""
    return (round(lo + up, _MID_DECIMALS), lo, up)


def possibility_ge(al, au, bl, bu):
    """Degree of possibility that [al,au] >= [bl,bu], in [0,1]."""
    span = (au - al) + (bu - bl)
    if span == 0.0:
        if al > bl:
            return 1.0
        if al < bl:
            return 0.0
        return 0.5
    inner = (bu - al) / span
    if inner < 0.0:
        inner = 0.0
    p = 1.0 - inner
    if p < 0.0:
        p = 0.0
    return p


def join_kernel(al, au, bl, bu):
    return (al if al >= bl else bl, au if au >= bu else bu)


def meet_kernel(al, au, bl, bu):
    return (al if al <= bl else bl, au if au <= bu else bu)


def complement_kernel(al, au):
    return (1.0 - au, 1.0 - al)


def ring_sum_kernel(al, au, bl, bu):
    return (al + bl - al * bl, au + bu - au * bu)


def ring_product_kernel(al, au, bl, bu):
    return (al * bl, au * bu)


def star_kernel(a, b):
    return (a + b) / (2.0 * (a * b + 1.0))


def _o1(a, b):
    d = a - b if a >= b else b - a
    return d / (1.0 + d)


def _o2(a, b):
    d = a - b if a >= b else b - a
    return d / (1.0 + 2.0 * d)


def _o3(a, b):
    d = a - b if a >= b else b - a
    return d / 2.0


def _o4(a, b):
    return star_kernel(a, b) / 2.0


_OP_SCALAR = {"O1": _o1, "O2": _o2, "O3": _o3, "O4": _o4}


def operator_kernel_raw(kind, al, au, bl, bu):
    """Endpointwise O-kernel without reordering; lower may exceed upper."""
    f = _OP_SCALAR[kind]
    return (f(al, bl), f(au, bu))


def operator_kernel(kind, al, au, bl, bu):
    """Endpointwise O-kernel, canonicalized to lower <= upper."""
    lo, up = operator_kernel_raw(kind, al, au, bl, bu)
    if lo > up:
        lo, up = up, lo
    return (lo, up)


# --- element-level helpers (elements are tuples of (lo, up) tuples) ---


def sort_element(intervals):
    """Canonical ascending order under the possibility-degree ranking."""
    return tuple(sorted(intervals, key=lambda iv: rank_key(iv[0], iv[1])))


def dedup_element(intervals):
    """Sorted element with exact-duplicate intervals collapsed."""
    return tuple(sorted(set(intervals), key=lambda iv: rank_key(iv[0], iv[1])))


def extend_element(intervals, size, optimistic):
    """Pad to ``size`` by repeating the largest (optimistic) or smallest interval."""
    pad = size - len(intervals)
    if pad <= 0:
        return tuple(intervals)
    if optimistic:
        return tuple(intervals) + (intervals[-1],) * pad
    return (intervals[0],) * pad + tuple(intervals)


def zip_combine(union, e1, e2, optimistic):
    """Index-wise join/meet after padding; result is NOT re-sorted."""
    n = len(e1) if len(e1) >= len(e2) else len(e2)
    a = extend_element(e1, n, optimistic)
    b = extend_element(e2, n, optimistic)
    k = join_kernel if union else meet_kernel
    return tuple(k(x[0], x[1], y[0], y[1]) for x, y in zip(a, b))


def combine_aligned(union, e1, e2, optimistic):
    """Aligned union/intersection: pad, combine index-wise, re-canonicalize."""
    return sort_element(zip_combine(union, e1, e2, optimistic))


def combine_pairwise(union, e1, e2):
    """All-pairs union/intersection, deduplicated and canonicalized."""
    k = join_kernel if union else meet_kernel
    return dedup_element([k(x[0], x[1], y[0], y[1]) for x in e1 for y in e2])


def complement_element(e):
    return sort_element([complement_kernel(lo, up) for lo, up in e])


def ring_sum_element(e1, e2):
    return dedup_element(
        [ring_sum_kernel(x[0], x[1], y[0], y[1]) for x in e1 for y in e2]
    )


def ring_product_element(e1, e2):
    return dedup_element(
        [ring_product_kernel(x[0], x[1], y[0], y[1]) for x in e1 for y in e2]
    )


def operator_element(kind, e1, e2):
    return dedup_element(
        [operator_kernel(kind, x[0], x[1], y[0], y[1]) for x in e1 for y in e2]
    )


def score_element(e):
    """Componentwise mean interval of all member intervals."""
    lo = 0.0
    up = 0.0
    for l, u in e:
        lo += l
        up += u
    n = float(len(e))
    return (lo / n, up / n)
