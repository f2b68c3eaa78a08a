"""Operand generation for law checking.

Element-level laws get exhaustive grid streams (all endpoint pairs on the
configured grid, elements up to the configured size) followed by seeded
random trials.  Soft-set laws cannot be enumerated exhaustively, so they get
a single-cell exhaustive stream where the arity allows, a handful of curated
seed instances that exercise the structurally interesting corners (absent
parameters, forced padding, midpoint ties, duplicated intervals), and then
random trials over bounded shapes.  Everything is a pure function of the
configured seed.
"""

from __future__ import annotations

import hashlib
import random
from itertools import combinations_with_replacement

from .evaluate import RawSoft


def rng_for(seed: int, law_id: str) -> random.Random:
    digest = hashlib.sha256(law_id.encode("utf-8")).digest()
    return random.Random(seed ^ int.from_bytes(digest[:8], "big"))


def grid_intervals(step: float) -> list[tuple[float, float]]:
    n = round(1.0 / step)
    points = [round(i * step, 12) for i in range(n + 1)]
    return [(lo, up) for lo in points for up in points if lo <= up]


def grid_elements(step: float, max_size: int) -> list[tuple]:
    ivs = grid_intervals(step)
    out: list[tuple] = []
    for size in range(1, max_size + 1):
        out.extend(tuple(c) for c in combinations_with_replacement(ivs, size))
    return out


def random_interval(rng: random.Random, step: float, snap: bool) -> tuple[float, float]:
    a, b = rng.random(), rng.random()
    if a > b:
        a, b = b, a
    if snap:
        a = min(1.0, round(round(a / step) * step, 12))
        b = min(1.0, round(round(b / step) * step, 12))
        if a > b:
            a, b = b, a
    return (a, b)


def random_element(rng: random.Random, step: float, max_size: int, snap: bool) -> tuple:
    from ..backend import kernels

    size = rng.randint(1, max_size)
    return kernels.sort_element([random_interval(rng, step, snap) for _ in range(size)])


def random_soft(
    rng: random.Random,
    params: tuple[str, ...],
    universe: tuple[str, ...],
    step: float,
    max_size: int,
    snap: bool,
) -> RawSoft:
    cells = {
        (e, h): random_element(rng, step, max_size, snap)
        for e in params
        for h in universe
    }
    return RawSoft(params, universe, cells)


def random_param_sets(
    rng: random.Random, count: int, max_parameters: int, shared: bool
) -> list[tuple[str, ...]]:
    pool = tuple(f"e{i + 1}" for i in range(max_parameters))
    if shared:
        size = rng.randint(1, len(pool))
        chosen = tuple(sorted(rng.sample(pool, size)))
        return [chosen] * count
    out = []
    for _ in range(count):
        size = rng.randint(1, len(pool))
        out.append(tuple(sorted(rng.sample(pool, size))))
    return out


# ---------------------------------------------------------------------------
# curated seed instances: parameter structure, forced padding, midpoint ties
# ---------------------------------------------------------------------------


def _soft(universe, table) -> RawSoft:
    params = tuple(table)
    cells = {(e, h): tuple(table[e][h]) for e in table for h in universe}
    return RawSoft(params, tuple(universe), cells)


_U = ("h1", "h2")

SEED_F = _soft(
    _U,
    {
        "e1": {"h1": [(0.3, 0.8)], "h2": [(0.3, 0.6), (0.3, 0.8), (0.5, 0.6)]},
        "e2": {"h1": [(0.2, 0.9), (0.7, 1.0)], "h2": [(0.2, 0.6), (0.8, 1.0)]},
    },
)

SEED_G = _soft(
    _U,
    {
        "e1": {"h1": [(0.0, 0.6), (0.7, 0.9)], "h2": [(0.4, 0.5), (0.4, 0.7), (0.4, 0.7)]},
        "e2": {"h1": [(0.6, 0.8)], "h2": [(0.3, 0.6), (0.3, 0.8)]},
        "e3": {"h1": [(0.3, 0.6), (0.5, 0.6)], "h2": [(0.1, 0.6), (0.3, 0.6), (0.3, 0.9)]},
    },
)

SEED_H = _soft(
    _U,
    {
        "e2": {"h1": [(0.2, 0.6), (0.4, 0.6), (0.7, 1.0)], "h2": [(0.3, 0.8)]},
        "e3": {"h1": [(0.2, 0.5), (0.3, 0.5)], "h2": [(0.2, 0.5), (0.6, 0.8)]},
    },
)

# single-cell triple that breaks mixed-parameter distributivity of
# intersection over union through a midpoint tie and a padded chain
SEED_TIE_F = _soft(("h1",), {"e1": {"h1": [(0.25, 0.5), (0.0, 1.0)]}})
SEED_TIE_G = _soft(("h1",), {"e1": {"h1": [(0.25, 0.25), (0.25, 0.5)]}})
SEED_TIE_H = _soft(("h1",), {"e1": {"h1": [(0.0, 0.0), (1.0, 1.0)]}})


def restrict(soft: RawSoft, params) -> RawSoft:
    keep = tuple(e for e in soft.params if e in set(params))
    cells = {(e, h): soft.cells[(e, h)] for e in keep for h in soft.universe}
    return RawSoft(keep, soft.universe, cells)


def _common(ops):
    acc = set(ops[0].params)
    for o in ops[1:]:
        acc &= set(o.params)
    return tuple(sorted(acc))


def _as_shared(ops):
    shared = _common(ops)
    return tuple(restrict(o, shared) for o in ops) if shared else None


def seed_instances(level: str, arity: int, parameter_mode: str) -> list[tuple]:
    """Deterministic curated operand tuples, tried before anything else."""
    if level != "soft":
        return []
    if arity == 1:
        tuples = [(SEED_F,), (SEED_G,), (SEED_H,)]
    elif arity == 2:
        tuples = [(SEED_F, SEED_G), (SEED_G, SEED_H), (SEED_F, SEED_H)]
    else:
        tuples = [
            (SEED_F, SEED_G, SEED_H),
            (SEED_TIE_F, SEED_TIE_G, SEED_TIE_H),
        ]
    if parameter_mode == "shared":
        shared = [_as_shared(ops) for ops in tuples]
        return [ops for ops in shared if ops is not None]
    return tuples
