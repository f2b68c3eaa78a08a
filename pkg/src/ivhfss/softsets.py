"""Parameterized families of hesitant sets over a fixed universe.

An ``IVHFSoftSet`` maps each parameter to a table assigning every universe
object an element.  Union follows the three-case rule over the united
parameter set (copy where only one side knows the parameter, combine where
both do); intersection restricts to the shared parameters.  Family versions
fold the binary operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from . import elements
from .elements import (
    DEFAULT_TOLERANCE,
    AlignmentPolicy,
    CombineMode,
    IVHFE,
    align,
    empty_element,
    full_element,
)
from .errors import (
    EmptyFamily,
    EmptyParameterIntersection,
    EmptyUniverse,
    ParameterMismatch,
    UniverseMismatch,
)


@dataclass(frozen=True, slots=True)
class IVHFSet:
    """One parameter's value: an element for every universe object."""

    values: dict[str, IVHFE]

    def __getitem__(self, obj: str) -> IVHFE:
        return self.values[obj]


@dataclass(frozen=True, slots=True)
class IVHFSoftSet:
    """Universe, parameter list, and the parameter -> object -> element table."""

    universe: tuple[str, ...]
    parameters: tuple[str, ...]
    table: dict[str, IVHFSet]

    def cell(self, parameter: str, obj: str) -> IVHFE:
        return self.table[parameter].values[obj]

    def cells(self):
        for e in self.parameters:
            for h in self.universe:
                yield e, h, self.table[e].values[h]


def make_soft_set(
    universe: Sequence[str],
    parameters: Sequence[str],
    values: Mapping[str, Mapping[str, IVHFE]],
) -> IVHFSoftSet:
    """Validating constructor: unique names, full coverage, canonical cells."""
    universe = tuple(universe)
    parameters = tuple(parameters)
    if not universe:
        raise EmptyUniverse("universe must be nonempty")
    if len(set(universe)) != len(universe):
        raise UniverseMismatch(f"duplicate object names in {universe}")
    if len(set(parameters)) != len(parameters):
        raise ParameterMismatch(f"duplicate parameter names in {parameters}")
    if set(values) != set(parameters):
        raise ParameterMismatch(
            f"table keys {sorted(values)} do not match parameters {sorted(parameters)}"
        )
    table = {}
    for e in parameters:
        row = values[e]
        if set(row) != set(universe):
            raise UniverseMismatch(
                f"parameter {e!r} covers {sorted(row)}, expected {sorted(universe)}"
            )
        table[e] = IVHFSet({h: row[h] for h in universe})
    return IVHFSoftSet(universe, parameters, table)


def _require_same_universe(f: IVHFSoftSet, g: IVHFSoftSet) -> tuple[str, ...]:
    if set(f.universe) != set(g.universe):
        raise UniverseMismatch(
            f"universes differ: {sorted(f.universe)} vs {sorted(g.universe)}"
        )
    return f.universe


def _merged_parameters(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    return tuple(a) + tuple(e for e in b if e not in set(a))


def soft_union(
    f: IVHFSoftSet,
    g: IVHFSoftSet,
    policy: AlignmentPolicy = AlignmentPolicy.OPTIMISTIC,
    mode: CombineMode = CombineMode.ALIGNED,
) -> IVHFSoftSet:
    """Parameters unite; sole-owner parameters copy, shared ones combine."""
    universe = _require_same_universe(f, g)
    fset, gset = set(f.parameters), set(g.parameters)
    values: dict[str, dict[str, IVHFE]] = {}
    for e in _merged_parameters(f.parameters, g.parameters):
        if e in fset and e in gset:
            values[e] = {
                h: elements.combine("union", f.cell(e, h), g.cell(e, h), mode, policy)
                for h in universe
            }
        elif e in fset:
            values[e] = {h: f.cell(e, h) for h in universe}
        else:
            values[e] = {h: g.cell(e, h) for h in universe}
    return make_soft_set(universe, tuple(values), values)


def soft_intersection(
    f: IVHFSoftSet,
    g: IVHFSoftSet,
    policy: AlignmentPolicy = AlignmentPolicy.OPTIMISTIC,
    mode: CombineMode = CombineMode.ALIGNED,
) -> IVHFSoftSet:
    """Restrict to shared parameters and combine cellwise."""
    universe = _require_same_universe(f, g)
    gset = set(g.parameters)
    shared = tuple(e for e in f.parameters if e in gset)
    if not shared:
        raise EmptyParameterIntersection(
            f"no shared parameters between {f.parameters} and {g.parameters}"
        )
    values = {
        e: {
            h: elements.combine("intersection", f.cell(e, h), g.cell(e, h), mode, policy)
            for h in universe
        }
        for e in shared
    }
    return make_soft_set(universe, shared, values)


def soft_complement(f: IVHFSoftSet) -> IVHFSoftSet:
    values = {
        e: {h: elements.complement(f.cell(e, h)) for h in f.universe}
        for e in f.parameters
    }
    return make_soft_set(f.universe, f.parameters, values)


def _constant_soft_set(
    parameters: Sequence[str], universe: Sequence[str], cell: Callable[[], IVHFE]
) -> IVHFSoftSet:
    values = {e: {h: cell() for h in universe} for e in parameters}
    return make_soft_set(tuple(universe), tuple(parameters), values)


def empty_of(parameters: Sequence[str], universe: Sequence[str]) -> IVHFSoftSet:
    """Every cell is {[0,0]}."""
    return _constant_soft_set(parameters, universe, empty_element)


def full_of(parameters: Sequence[str], universe: Sequence[str]) -> IVHFSoftSet:
    """Every cell is {[1,1]}."""
    return _constant_soft_set(parameters, universe, full_element)


def is_subset(
    f: IVHFSoftSet,
    g: IVHFSoftSet,
    policy: AlignmentPolicy = AlignmentPolicy.OPTIMISTIC,
    tol: float = DEFAULT_TOLERANCE,
) -> bool:
    """Parameter containment plus k-th-wise componentwise <= after alignment."""
    _require_same_universe(f, g)
    if not set(f.parameters) <= set(g.parameters):
        return False
    for e in f.parameters:
        for h in f.universe:
            a, b = align(f.cell(e, h), g.cell(e, h), policy)
            for x, y in zip(a.intervals, b.intervals):
                if x.lower > y.lower + tol or x.upper > y.upper + tol:
                    return False
    return True


def _cellwise_same_parameters(
    f: IVHFSoftSet, g: IVHFSoftSet, op: Callable[[IVHFE, IVHFE], IVHFE]
) -> IVHFSoftSet:
    universe = _require_same_universe(f, g)
    if set(f.parameters) != set(g.parameters):
        raise ParameterMismatch(
            f"parameter sets differ: {sorted(f.parameters)} vs {sorted(g.parameters)}"
        )
    values = {
        e: {h: op(f.cell(e, h), g.cell(e, h)) for h in universe}
        for e in f.parameters
    }
    return make_soft_set(universe, f.parameters, values)


def soft_ring_sum(f: IVHFSoftSet, g: IVHFSoftSet) -> IVHFSoftSet:
    return _cellwise_same_parameters(f, g, elements.ring_sum)


def soft_ring_product(f: IVHFSoftSet, g: IVHFSoftSet) -> IVHFSoftSet:
    return _cellwise_same_parameters(f, g, elements.ring_product)


def soft_apply_operator(kind: str, f: IVHFSoftSet, g: IVHFSoftSet) -> IVHFSoftSet:
    """O1..O4 cellwise on the shared parameters."""
    universe = _require_same_universe(f, g)
    gset = set(g.parameters)
    shared = tuple(e for e in f.parameters if e in gset)
    if not shared:
        raise EmptyParameterIntersection(
            f"no shared parameters between {f.parameters} and {g.parameters}"
        )
    values = {
        e: {h: elements.apply_operator(kind, f.cell(e, h), g.cell(e, h)) for h in universe}
        for e in shared
    }
    return make_soft_set(universe, shared, values)


def family_union(
    members: Iterable[IVHFSoftSet],
    policy: AlignmentPolicy = AlignmentPolicy.OPTIMISTIC,
    mode: CombineMode = CombineMode.ALIGNED,
) -> IVHFSoftSet:
    """Left fold of soft_union; absent parameters are skipped, not padded."""
    members = list(members)
    if not members:
        raise EmptyFamily("family union needs at least one member")
    acc = members[0]
    for m in members[1:]:
        acc = soft_union(acc, m, policy, mode)
    return acc


def family_intersection(
    members: Iterable[IVHFSoftSet],
    policy: AlignmentPolicy = AlignmentPolicy.OPTIMISTIC,
    mode: CombineMode = CombineMode.ALIGNED,
) -> IVHFSoftSet:
    """Left fold of soft_intersection over the shared parameter core."""
    members = list(members)
    if not members:
        raise EmptyFamily("family intersection needs at least one member")
    shared = set(members[0].parameters)
    for m in members[1:]:
        shared &= set(m.parameters)
    if not shared:
        raise EmptyParameterIntersection("family has no common parameter")
    acc = members[0]
    for m in members[1:]:
        acc = soft_intersection(acc, m, policy, mode)
    return acc


def soft_strict_equal(
    f: IVHFSoftSet, g: IVHFSoftSet, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """Same parameters and cellwise strict multiset equality."""
    if set(f.parameters) != set(g.parameters) or set(f.universe) != set(g.universe):
        return False
    return all(
        elements.strict_equal(f.cell(e, h), g.cell(e, h), tol)
        for e in f.parameters
        for h in f.universe
    )


def soft_equivalent(
    f: IVHFSoftSet, g: IVHFSoftSet, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """Same parameters and cellwise dedup equivalence."""
    if set(f.parameters) != set(g.parameters) or set(f.universe) != set(g.universe):
        return False
    return all(
        elements.equivalent(f.cell(e, h), g.cell(e, h), tol)
        for e in f.parameters
        for h in f.universe
    )
