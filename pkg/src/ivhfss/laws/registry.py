"""The registry of checkable identities.

Every sub-item of every claimed identity gets one ``Law``.  A law pins the
evaluation regime under which its claim is checked:

* ``pairwise`` — the set-builder reading; used for the complement/De Morgan
  family, which is exact for the all-pairs operations, and for the
  distribution claims of the difference operators.
* ``aligned`` — the padded index-wise reading of the worked examples; used
  for idempotence/identity laws, commutativity, and the mixed-parameter
  distributivity claims (the ones refuted by instance).
* ``sequence`` — one alignment pass, no re-sorting between steps; used for
  associativity and shared-parameter distributivity, which chain several
  combines the way the worked tables are computed.
* ``synchronized`` — both sides indexed by the same (gamma1, gamma2) pair
  set; used for the ring-vs-operator absorption claims, whose content is a
  pair-by-pair comparison of the two unions.

``build_raw`` evaluates on the fast raw layer; ``build_public`` evaluates
the literal composition through the public API and is what reported
counterexamples are validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .. import elements as E
from .. import softsets as S
from ..elements import CombineMode
from . import evaluate as ev
from .evaluate import RawSoft

ALIGNED = CombineMode.ALIGNED
PAIRWISE = CombineMode.PAIRWISE


@dataclass(frozen=True)
class Law:
    law_id: str
    description: str
    level: str  # "element" | "soft"
    parameter_mode: str  # "shared" | "mixed"
    equality: str  # "strict" | "equivalent" | "subset"
    mode: str  # "aligned" | "pairwise" | "sequence" | "synchronized"
    arity: int
    build_raw: Callable
    build_public: Callable
    constraint: Callable = lambda ops: True

    @property
    def expected_status(self) -> str:
        """Desk-analysis prediction; advisory only, never asserted by checking."""
        return "violated" if self.law_id in EXPECTED_VIOLATED else "holds"


EXPECTED_VIOLATED = frozenset(
    ["P3.7.iii", "P3.7.iv", "P3.11.i", "P3.11.ii"]
    + [f"P4.{k}.{i}" for k in (2, 3, 4, 5) for i in ("iii", "iv", "v", "vi")]
)


def _shared_params(ops: Sequence[RawSoft]) -> bool:
    first = set(ops[0].params)
    return all(set(o.params) == first for o in ops[1:])


def _inter_nonempty(*groups):
    def check(ops):
        for idxs in groups:
            acc = set(ops[idxs[0]].params)
            for i in idxs[1:]:
                acc &= set(ops[i].params)
            if not acc:
                return False
        return True

    return check


# ---------------------------------------------------------------------------
# element-level De Morgan (two sub-items)
# ---------------------------------------------------------------------------


def _e212(i: str) -> Law:
    union_first = i == "ii"

    def raw(ops):
        m1, m2 = ops
        k = ev.kernels
        if union_first:
            lhs = k.combine_pairwise(False, k.complement_element(m1), k.complement_element(m2))
            rhs = k.complement_element(k.combine_pairwise(True, m1, m2))
        else:
            lhs = k.combine_pairwise(True, k.complement_element(m1), k.complement_element(m2))
            rhs = k.complement_element(k.combine_pairwise(False, m1, m2))
        return lhs, rhs

    def public(ops):
        m1, m2 = ops
        if union_first:
            lhs = E.combine("intersection", E.complement(m1), E.complement(m2), PAIRWISE)
            rhs = E.complement(E.combine("union", m1, m2, PAIRWISE))
        else:
            lhs = E.combine("union", E.complement(m1), E.complement(m2), PAIRWISE)
            rhs = E.complement(E.combine("intersection", m1, m2, PAIRWISE))
        return lhs, rhs

    desc = (
        "complement swaps all-pairs union and intersection"
        if union_first
        else "complement swaps all-pairs intersection and union"
    )
    return Law(f"P2.12.{i}", desc, "element", "shared", "equivalent", "pairwise", 2, raw, public)


# ---------------------------------------------------------------------------
# idempotence and empty/full identities (one operand)
# ---------------------------------------------------------------------------

_P35_SPECS = {
    "i": ("union", "self", "left", "strict", "union with itself is itself"),
    "ii": ("intersection", "self", "left", "strict", "intersection with itself is itself"),
    "iii": ("union", "empty", "left", "equivalent", "union with the empty set is itself"),
    "iv": ("intersection", "empty", "other", "equivalent", "intersection with the empty set is empty"),
    "v": ("union", "full", "other", "equivalent", "union with the full set is full"),
    "vi": ("intersection", "full", "left", "equivalent", "intersection with the full set is itself"),
}


def _e35(i: str) -> Law:
    kind, partner, keep, equality, desc = _P35_SPECS[i]
    union = kind == "union"

    def raw(ops):
        (f,) = ops
        if partner == "self":
            g = f
        elif partner == "empty":
            g = ev.constant_like(f, (0.0, 0.0))
        else:
            g = ev.constant_like(f, (1.0, 1.0))
        lhs = ev.soft_union(f, g, "aligned") if union else ev.soft_intersection(f, g, "aligned")
        rhs = f if keep == "left" else g
        return lhs, rhs

    def public(ops):
        (f,) = ops
        if partner == "self":
            g = f
        elif partner == "empty":
            g = S.empty_of(f.parameters, f.universe)
        else:
            g = S.full_of(f.parameters, f.universe)
        lhs = S.soft_union(f, g) if union else S.soft_intersection(f, g)
        rhs = f if keep == "left" else g
        return lhs, rhs

    return Law(f"P3.5.{i}", desc, "soft", "shared", equality, "aligned", 1, raw, public)


# ---------------------------------------------------------------------------
# De Morgan for soft sets: shared-parameter equalities and mixed inclusions
# ---------------------------------------------------------------------------


def _e36(i: str) -> Law:
    union_inside = i == "i"

    def raw(ops):
        f, g = ops
        if union_inside:
            lhs = ev.soft_complement(ev.soft_union(f, g, "pairwise"))
            rhs = ev.soft_intersection(ev.soft_complement(f), ev.soft_complement(g), "pairwise")
        else:
            lhs = ev.soft_complement(ev.soft_intersection(f, g, "pairwise"))
            rhs = ev.soft_union(ev.soft_complement(f), ev.soft_complement(g), "pairwise")
        return lhs, rhs

    def public(ops):
        f, g = ops
        if union_inside:
            lhs = S.soft_complement(S.soft_union(f, g, mode=PAIRWISE))
            rhs = S.soft_intersection(S.soft_complement(f), S.soft_complement(g), mode=PAIRWISE)
        else:
            lhs = S.soft_complement(S.soft_intersection(f, g, mode=PAIRWISE))
            rhs = S.soft_union(S.soft_complement(f), S.soft_complement(g), mode=PAIRWISE)
        return lhs, rhs

    desc = "complement of the %s is the %s of complements (shared parameters)" % (
        ("union", "intersection") if union_inside else ("intersection", "union")
    )
    return Law(f"P3.6.{i}", desc, "soft", "shared", "strict", "pairwise", 2, raw, public)


# sides: mc = meet of complements, jc = join of complements,
#        cu = complement of union, ci = complement of intersection
_P37_SPECS = {
    "i": ("mc", "cu", "meet of complements within complement of union"),
    "ii": ("ci", "jc", "complement of intersection within join of complements"),
    "iii": ("mc", "ci", "meet of complements within complement of intersection"),
    "iv": ("cu", "jc", "complement of union within join of complements"),
}


def _e37(i: str) -> Law:
    shape = _P37_SPECS[i]

    def raw(ops):
        f, g = ops
        fc, gc = ev.soft_complement(f), ev.soft_complement(g)
        sides = {
            "mc": lambda: ev.soft_intersection(fc, gc, "pairwise"),
            "jc": lambda: ev.soft_union(fc, gc, "pairwise"),
            "cu": lambda: ev.soft_complement(ev.soft_union(f, g, "pairwise")),
            "ci": lambda: ev.soft_complement(ev.soft_intersection(f, g, "pairwise")),
        }
        return sides[shape[0]](), sides[shape[1]]()

    def public(ops):
        f, g = ops
        fc, gc = S.soft_complement(f), S.soft_complement(g)
        sides = {
            "mc": lambda: S.soft_intersection(fc, gc, mode=PAIRWISE),
            "jc": lambda: S.soft_union(fc, gc, mode=PAIRWISE),
            "cu": lambda: S.soft_complement(S.soft_union(f, g, mode=PAIRWISE)),
            "ci": lambda: S.soft_complement(S.soft_intersection(f, g, mode=PAIRWISE)),
        }
        return sides[shape[0]](), sides[shape[1]]()

    needs_overlap = i in ("i", "ii", "iii")
    return Law(
        f"P3.7.{i}",
        shape[2],
        "soft",
        "mixed",
        "subset",
        "pairwise",
        2,
        raw,
        public,
        _inter_nonempty((0, 1)) if needs_overlap else (lambda ops: True),
    )


# ---------------------------------------------------------------------------
# commutativity / associativity (mixed = 3.8, shared = 3.9)
# ---------------------------------------------------------------------------


def _comm_assoc(prop: str, i: str, parameter_mode: str) -> Law:
    union = i in ("i", "iii")
    is_comm = i in ("i", "ii")
    opname = "union" if union else "intersection"

    if is_comm:

        def raw(ops):
            f, g = ops
            op = ev.soft_union if union else ev.soft_intersection
            return op(f, g, "aligned"), op(g, f, "aligned")

        def public(ops):
            f, g = ops
            op = S.soft_union if union else S.soft_intersection
            return op(f, g), op(g, f)

        constraint = _inter_nonempty((0, 1)) if not union and parameter_mode == "mixed" else (lambda ops: True)
        return Law(
            f"{prop}.{i}",
            f"{opname} is commutative ({parameter_mode} parameters)",
            "soft",
            parameter_mode,
            "strict",
            "aligned",
            2,
            raw,
            public,
            constraint,
        )

    def raw(ops):
        f, g, h = ops
        op = ev.soft_union if union else ev.soft_intersection
        lhs = op(f, op(g, h, "sequence"), "sequence")
        rhs = op(op(f, g, "sequence"), h, "sequence")
        return lhs, rhs

    def public(ops):
        f, g, h = ops
        op = S.soft_union if union else S.soft_intersection
        return op(f, op(g, h)), op(op(f, g), h)

    constraint = _inter_nonempty((0, 1, 2)) if not union and parameter_mode == "mixed" else (lambda ops: True)
    return Law(
        f"{prop}.{i}",
        f"{opname} is associative ({parameter_mode} parameters)",
        "soft",
        parameter_mode,
        "strict",
        "sequence",
        3,
        raw,
        public,
        constraint,
    )


# ---------------------------------------------------------------------------
# distributivity: shared (3.10, sequence) and mixed (3.11, aligned)
# ---------------------------------------------------------------------------


def _distrib(prop: str, i: str, parameter_mode: str, mode: str, equality: str) -> Law:
    union_outer = i == "i"

    def raw(ops):
        f, g, h = ops
        u = lambda a, b: ev.soft_union(a, b, mode)
        n = lambda a, b: ev.soft_intersection(a, b, mode)
        if union_outer:
            return u(f, n(g, h)), n(u(f, g), u(f, h))
        return n(f, u(g, h)), u(n(f, g), n(f, h))

    def public(ops):
        f, g, h = ops
        if union_outer:
            return (
                S.soft_union(f, S.soft_intersection(g, h)),
                S.soft_intersection(S.soft_union(f, g), S.soft_union(f, h)),
            )
        return (
            S.soft_intersection(f, S.soft_union(g, h)),
            S.soft_union(S.soft_intersection(f, g), S.soft_intersection(f, h)),
        )

    if parameter_mode == "mixed":
        constraint = _inter_nonempty((1, 2)) if union_outer else _inter_nonempty((0, 1), (0, 2))
    else:
        constraint = lambda ops: True
    kind = "union over intersection" if union_outer else "intersection over union"
    return Law(
        f"{prop}.{i}",
        f"{kind} distributivity ({parameter_mode} parameters)",
        "soft",
        parameter_mode,
        equality,
        mode,
        3,
        raw,
        public,
        constraint,
    )


# ---------------------------------------------------------------------------
# family De Morgan: mixed inclusions (3.16) and shared equalities (3.17)
# ---------------------------------------------------------------------------


def _family_fold_raw(union: bool, members):
    acc = members[0]
    for m in members[1:]:
        acc = ev.soft_union(acc, m, "pairwise") if union else ev.soft_intersection(acc, m, "pairwise")
    return acc


def _family(prop: str, i: str, parameter_mode: str, equality: str) -> Law:
    inter_of_comps_first = i == "i"

    def raw(ops):
        comps = [ev.soft_complement(f) for f in ops]
        if inter_of_comps_first:
            lhs = _family_fold_raw(False, comps)
            rhs = ev.soft_complement(_family_fold_raw(True, list(ops)))
        else:
            lhs = ev.soft_complement(_family_fold_raw(False, list(ops)))
            rhs = _family_fold_raw(True, comps)
        return lhs, rhs

    def public(ops):
        comps = [S.soft_complement(f) for f in ops]
        if inter_of_comps_first:
            lhs = S.family_intersection(comps, mode=PAIRWISE)
            rhs = S.soft_complement(S.family_union(list(ops), mode=PAIRWISE))
        else:
            lhs = S.soft_complement(S.family_intersection(list(ops), mode=PAIRWISE))
            rhs = S.family_union(comps, mode=PAIRWISE)
        return lhs, rhs

    desc = (
        "family meet of complements vs complement of family union"
        if inter_of_comps_first
        else "complement of family meet vs family union of complements"
    )
    def flexible_constraint(ops):
        acc = set(ops[0].params)
        for o in ops[1:]:
            acc &= set(o.params)
        return bool(acc)

    return Law(
        f"{prop}.{i}",
        desc + f" ({parameter_mode} parameters)",
        "soft",
        parameter_mode,
        equality,
        "pairwise",
        3,
        raw,
        public,
        flexible_constraint,
    )


# ---------------------------------------------------------------------------
# difference-operator identities (O1..O4)
# ---------------------------------------------------------------------------


def _op_absorption(prop: str, i: str, kind: str) -> Law:
    which = "sum" if i in ("i", "ii") else "prod"
    meet_side = i in ("i", "iii")

    def raw(ops):
        m1, m2 = ops
        if meet_side:
            lhs = ev.sync_meet_side(kind, which, m1, m2)
            rhs = ev.operator_result(kind, m1, m2)
        else:
            lhs = ev.sync_join_side(kind, which, m1, m2)
            rhs = ev.ring_result(which, m1, m2)
        return lhs, rhs

    def public(ops):
        m1, m2 = ops
        ring = E.ring_sum(m1, m2) if which == "sum" else E.ring_product(m1, m2)
        oper = E.apply_operator(kind, m1, m2)
        if meet_side:
            return E.combine("intersection", ring, oper, PAIRWISE), oper
        return E.combine("union", ring, oper, PAIRWISE), ring

    ring_name = "ring sum" if which == "sum" else "ring product"
    side = "meet" if meet_side else "join"
    keep = kind if meet_side else ring_name
    return Law(
        f"{prop}.{i}",
        f"{side} of {ring_name} with {kind} gives {keep} back",
        "element",
        "shared",
        "equivalent",
        "synchronized",
        2,
        raw,
        public,
    )


def _op_distribution(prop: str, i: str, kind: str) -> Law:
    union = i == "v"

    def raw(ops):
        m1, m2, m3 = ops
        k = ev.kernels
        combined = k.combine_pairwise(union, m1, m2)
        lhs = ev.operator_result(kind, combined, m3)
        rhs = k.combine_pairwise(
            union, ev.operator_result(kind, m1, m3), ev.operator_result(kind, m2, m3)
        )
        return lhs, rhs

    def public(ops):
        m1, m2, m3 = ops
        opname = "union" if union else "intersection"
        lhs = E.apply_operator(kind, E.combine(opname, m1, m2, PAIRWISE), m3)
        rhs = E.combine(
            opname,
            E.apply_operator(kind, m1, m3),
            E.apply_operator(kind, m2, m3),
            PAIRWISE,
        )
        return lhs, rhs

    opname = "union" if union else "intersection"
    return Law(
        f"{prop}.{i}",
        f"{kind} distributes over all-pairs {opname}",
        "element",
        "shared",
        "equivalent",
        "pairwise",
        3,
        raw,
        public,
    )


def registry() -> list[Law]:
    """All 54 laws, grouped by identity family."""
    laws: list[Law] = []
    laws += [_e212(i) for i in ("i", "ii")]
    laws += [_e35(i) for i in ("i", "ii", "iii", "iv", "v", "vi")]
    laws += [_e36(i) for i in ("i", "ii")]
    laws += [_e37(i) for i in ("i", "ii", "iii", "iv")]
    laws += [_comm_assoc("P3.8", i, "mixed") for i in ("i", "ii", "iii", "iv")]
    laws += [_comm_assoc("P3.9", i, "shared") for i in ("i", "ii", "iii", "iv")]
    laws += [_distrib("P3.10", i, "shared", "sequence", "equivalent") for i in ("i", "ii")]
    laws += [_distrib("P3.11", i, "mixed", "aligned", "strict") for i in ("i", "ii")]
    laws += [_family("P3.16", i, "mixed", "subset") for i in ("i", "ii")]
    laws += [_family("P3.17", i, "shared", "strict") for i in ("i", "ii")]
    for prop, kind in (("P4.2", "O1"), ("P4.3", "O2"), ("P4.4", "O3"), ("P4.5", "O4")):
        laws += [_op_absorption(prop, i, kind) for i in ("i", "ii", "iii", "iv")]
        laws += [_op_distribution(prop, i, kind) for i in ("v", "vi")]
    ids = [law.law_id for law in laws]
    assert len(ids) == 54 and len(set(ids)) == 54
    return laws
