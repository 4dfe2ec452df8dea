"""Deterministic random formulas, inferences and valuations for the
property suites.

Constructor choice is uniform under a depth budget; the constants T, F, L
appear with a fixed small weight so that their code paths get exercised.
"""

from __future__ import annotations

import random
from typing import Sequence

from .formula import And, Formula, Inference, Not, Or, Var, BOT, LAM, TOP
from .semantics import VALUE_ORDER, Valuation

CONSTANTS = (TOP, BOT, LAM)
CONST_WEIGHT = 0.15


def random_formula(rng: random.Random, variables: Sequence[str], max_depth: int) -> Formula:
    if max_depth <= 0:
        kind = "leaf"
    else:
        kind = rng.choice(("leaf", "not", "and", "or"))
    if kind == "leaf":
        if rng.random() < CONST_WEIGHT or not variables:
            return rng.choice(CONSTANTS)
        return Var(rng.choice(variables))
    if kind == "not":
        return Not(random_formula(rng, variables, max_depth - 1))
    left = random_formula(rng, variables, max_depth - 1)
    right = random_formula(rng, variables, max_depth - 1)
    return And(left, right) if kind == "and" else Or(left, right)


def random_formula_set(
    rng: random.Random,
    variables: Sequence[str],
    max_depth: int,
    max_size: int,
    min_size: int = 0,
) -> tuple[Formula, ...]:
    size = rng.randint(min_size, max_size)
    return tuple(random_formula(rng, variables, max_depth) for _ in range(size))


def random_inference(
    rng: random.Random,
    variables: Sequence[str],
    max_depth: int,
    max_side: int = 2,
) -> Inference:
    return Inference(
        random_formula_set(rng, variables, max_depth, max_side),
        random_formula_set(rng, variables, max_depth, max_side),
    )


def random_valuation(rng: random.Random, names: Sequence[str]) -> Valuation:
    return Valuation({name: rng.choice(VALUE_ORDER) for name in names})


def variable_pool(max_vars: int) -> tuple[str, ...]:
    base = ("p", "q", "r", "s", "t", "u")
    if max_vars <= len(base):
        return base[:max_vars]
    return base + tuple(f"v{i}" for i in range(max_vars - len(base)))
