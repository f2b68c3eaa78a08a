# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython build of the interval/element kernels.

Must stay numerically identical to ``_kernels_py``: same formulas, same
operation order, so both backends produce bit-for-bit equal results.
"""

BACKEND = "cython"

cdef int _MID_DECIMALS = 12


def rank_key(double lo, double up):
    return (round(lo + up, _MID_DECIMALS), lo, up)


cdef inline tuple _key(double lo, double up):
    return (round(lo + up, _MID_DECIMALS), lo, up)


def possibility_ge(double al, double au, double bl, double bu):
    cdef double span = (au - al) + (bu - bl)
    cdef double inner, p
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


def join_kernel(double al, double au, double bl, double bu):
    return (al if al >= bl else bl, au if au >= bu else bu)


def meet_kernel(double al, double au, double bl, double bu):
    return (al if al <= bl else bl, au if au <= bu else bu)


def complement_kernel(double al, double au):
    return (1.0 - au, 1.0 - al)


def ring_sum_kernel(double al, double au, double bl, double bu):
    return (al + bl - al * bl, au + bu - au * bu)


def ring_product_kernel(double al, double au, double bl, double bu):
    return (al * bl, au * bu)


def star_kernel(double a, double b):
    return (a + b) / (2.0 * (a * b + 1.0))


cdef inline double _star(double a, double b):
    return (a + b) / (2.0 * (a * b + 1.0))


cdef inline double _oscalar(int kind, double a, double b):
    cdef double d
    if kind == 4:
        return _star(a, b) / 2.0
    d = a - b if a >= b else b - a
    if kind == 1:
        return d / (1.0 + d)
    if kind == 2:
        return d / (1.0 + 2.0 * d)
    return d / 2.0


cdef inline int _kind_code(str kind) except -1:
    if kind == "O1":
        return 1
    if kind == "O2":
        return 2
    if kind == "O3":
        return 3
    if kind == "O4":
        return 4
    raise KeyError(kind)


def operator_kernel_raw(str kind, double al, double au, double bl, double bu):
    cdef int k = _kind_code(kind)
    return (_oscalar(k, al, bl), _oscalar(k, au, bu))


def operator_kernel(str kind, double al, double au, double bl, double bu):
    cdef int k = _kind_code(kind)
    cdef double lo = _oscalar(k, al, bl)
    cdef double up = _oscalar(k, au, bu)
    if lo > up:
        lo, up = up, lo
    return (lo, up)


def sort_element(intervals):
    cdef list keyed = [(_key(iv[0], iv[1]), iv) for iv in intervals]
    keyed.sort()
    return tuple(kv[1] for kv in keyed)


def dedup_element(intervals):
    cdef list keyed = [(_key(iv[0], iv[1]), iv) for iv in set(intervals)]
    keyed.sort()
    return tuple(kv[1] for kv in keyed)


def extend_element(intervals, Py_ssize_t size, bint optimistic):
    cdef Py_ssize_t pad = size - len(intervals)
    if pad <= 0:
        return tuple(intervals)
    if optimistic:
        return tuple(intervals) + (intervals[len(intervals) - 1],) * pad
    return (intervals[0],) * pad + tuple(intervals)


def zip_combine(bint union, e1, e2, bint optimistic):
    cdef Py_ssize_t n = len(e1) if len(e1) >= len(e2) else len(e2)
    a = extend_element(e1, n, optimistic)
    b = extend_element(e2, n, optimistic)
    cdef list out = []
    cdef double xl, xu, yl, yu
    cdef Py_ssize_t i
    for i in range(n):
        xl, xu = a[i]
        yl, yu = b[i]
        if union:
            out.append((xl if xl >= yl else yl, xu if xu >= yu else yu))
        else:
            out.append((xl if xl <= yl else yl, xu if xu <= yu else yu))
    return tuple(out)


def combine_aligned(bint union, e1, e2, bint optimistic):
    return sort_element(zip_combine(union, e1, e2, optimistic))


def combine_pairwise(bint union, e1, e2):
    cdef set acc = set()
    cdef double xl, xu, yl, yu
    for x in e1:
        xl, xu = x
        for y in e2:
            yl, yu = y
            if union:
                acc.add((xl if xl >= yl else yl, xu if xu >= yu else yu))
            else:
                acc.add((xl if xl <= yl else yl, xu if xu <= yu else yu))
    return dedup_element(acc)


def complement_element(e):
    return sort_element([(1.0 - iv[1], 1.0 - iv[0]) for iv in e])


def ring_sum_element(e1, e2):
    cdef set acc = set()
    cdef double xl, xu, yl, yu
    for x in e1:
        xl, xu = x
        for y in e2:
            yl, yu = y
            acc.add((xl + yl - xl * yl, xu + yu - xu * yu))
    return dedup_element(acc)


def ring_product_element(e1, e2):
    cdef set acc = set()
    cdef double xl, xu, yl, yu
    for x in e1:
        xl, xu = x
        for y in e2:
            yl, yu = y
            acc.add((xl * yl, xu * yu))
    return dedup_element(acc)


def operator_element(str kind, e1, e2):
    cdef int k = _kind_code(kind)
    cdef set acc = set()
    cdef double xl, xu, yl, yu, lo, up
    for x in e1:
        xl, xu = x
        for y in e2:
            yl, yu = y
            lo = _oscalar(k, xl, yl)
            up = _oscalar(k, xu, yu)
            if lo > up:
                lo, up = up, lo
            acc.add((lo, up))
    return dedup_element(acc)


def score_element(e):
    cdef double lo = 0.0
    cdef double up = 0.0
    cdef double l, u
    for iv in e:
        l, u = iv
        lo += l
        up += u
    cdef double n = <double>len(e)
    return (lo / n, up / n)
