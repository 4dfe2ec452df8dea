"""Batch property runner behind the `oracle` CLI verb.

Runs the cross-module consistency properties on randomly generated
instances and reports pass/fail counts.  Deterministic for a given seed.
The `standards` parameter exists as a test hook: passing a corrupted
logic standard must make the suite fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .formula import (
    And,
    Formula,
    Inference,
    Not,
    Or,
    atoms,
    parse_formula,
    print_formula,
    print_sequent,
)
from .semantics import (
    HALF,
    ZERO,
    ONE,
    Valuation,
    all_half_valuation,
    enumerate_valuations,
    eval_formula,
)
from .consequence import (
    STANDARDS,
    antivalid,
    is_antitheorem,
    is_theorem,
    valid,
)
from .decomposition import (
    ProductWitness,
    k3_dnf,
    st_connecting_formula,
    sum_equals_antitheorems_plus_theorems,
    ts_sum_decision,
)
from .duality import invert, op_dual_inference
from .formula import conjoin
from .randgen import (
    random_formula,
    random_formula_set,
    random_inference,
    random_valuation,
    variable_pool,
)


@dataclass
class PropertyResult:
    name: str
    samples: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class OracleReport:
    results: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)


def _subformulas(f: Formula) -> Iterator[Formula]:
    if isinstance(f, Not):
        yield f.sub
    elif isinstance(f, (And, Or)):
        yield f.left
        yield f.right


def _reductions(inf: Inference) -> Iterator[Inference]:
    for i in range(len(inf.premises)):
        yield Inference(inf.premises[:i] + inf.premises[i + 1:], inf.conclusions)
    for i in range(len(inf.conclusions)):
        yield Inference(inf.premises, inf.conclusions[:i] + inf.conclusions[i + 1:])
    for i, f in enumerate(inf.premises):
        for sub in _subformulas(f):
            yield Inference(
                inf.premises[:i] + (sub,) + inf.premises[i + 1:], inf.conclusions
            )
    for i, f in enumerate(inf.conclusions):
        for sub in _subformulas(f):
            yield Inference(
                inf.premises, inf.conclusions[:i] + (sub,) + inf.conclusions[i + 1:]
            )


def _shrink(inf: Inference, fails: Callable[[Inference], bool]) -> Inference:
    """Greedy minimization: drop side formulas / descend into subformulas
    while the failure persists."""
    changed = True
    while changed:
        changed = False
        for candidate in _reductions(inf):
            try:
                still_failing = fails(candidate)
            except Exception:
                still_failing = False
            if still_failing:
                inf = candidate
                changed = True
                break
    return inf


def _shrunk_counterexample(inf: Inference, fails: Callable[[Inference], bool]) -> str:
    return print_sequent(_shrink(inf, fails))


# --------------------------------------------------------------------------
# individual properties; each returns None or a counterexample description


def _prop_roundtrip(rng, variables, max_depth, standards):
    f = random_formula(rng, variables, max_depth)
    if parse_formula(print_formula(f)) != f:
        return f"formula {f!r} does not round-trip"
    return None


def _prop_monotonicity(rng, variables, max_depth, standards):
    f = random_formula(rng, variables, max_depth)
    names = sorted(atoms(f) - {"T", "F", "L"})
    v = random_valuation(rng, names)
    sharpened = {
        name: v.assignments[name] if v.assignments[name] != HALF else rng.choice((ZERO, HALF, ONE))
        for name in names
    }
    v_star = Valuation(sharpened)
    value = eval_formula(f, v)
    if value != HALF and eval_formula(f, v_star) != value:
        return f"classical value of {print_formula(f)} not preserved under sharpening"
    return None


def _prop_all_half(rng, variables, max_depth, standards):
    f = random_formula(rng, variables, max_depth)
    half = all_half_valuation()
    tolerated = any(eval_formula(f, v) != ZERO for v in enumerate_valuations(atoms(f)))
    if tolerated and eval_formula(f, half) == ZERO:
        return f"tolerant satisfiability of {print_formula(f)} lost at the all-1/2 valuation"
    falsifiable = any(eval_formula(f, v) != ONE for v in enumerate_valuations(atoms(f)))
    if falsifiable and eval_formula(f, half) == ONE:
        return f"strict falsifiability of {print_formula(f)} lost at the all-1/2 valuation"
    return None


def _prop_dnf_equivalence(rng, variables, max_depth, standards):
    k3 = standards["K3"]
    gamma = random_formula_set(rng, variables, max_depth, max_size=2, min_size=1)
    dnf = k3_dnf(gamma)
    if not valid(k3, Inference(gamma, (dnf,))).valid:
        return f"premises do not K3-entail their DNF: {print_sequent(Inference(gamma, (dnf,)))}"
    if not valid(k3, Inference((dnf,), (conjoin(gamma),))).valid:
        return f"DNF does not K3-entail the conjoined premises: {print_formula(dnf)}"
    return None


def _prop_st_product(rng, variables, max_depth, standards):
    st = standards["ST"]
    inf = random_inference(rng, variables, max_depth)

    def fails(candidate: Inference) -> bool:
        witness = st_connecting_formula(candidate)
        return valid(st, candidate).valid != isinstance(witness, ProductWitness)

    if fails(inf):
        return "product witness disagrees with ST-validity: " + _shrunk_counterexample(inf, fails)
    return None


def _prop_ts_sum(rng, variables, max_depth, standards):
    ts = standards["TS"]
    inf = random_inference(rng, variables, max_depth)

    def fails(candidate: Inference) -> bool:
        return valid(ts, candidate).valid != ts_sum_decision(candidate).member

    if fails(inf):
        return "sum membership disagrees with TS-validity: " + _shrunk_counterexample(inf, fails)
    return None


def _prop_lattice(rng, variables, max_depth, standards):
    inf = random_inference(rng, variables, max_depth)
    inclusions = (("TS", "K3"), ("TS", "LP"), ("K3", "ST"), ("LP", "ST"))

    def fails(candidate: Inference) -> bool:
        return any(
            valid(standards[small], candidate).valid
            and not valid(standards[big], candidate).valid
            for small, big in inclusions
        )

    if fails(inf):
        return "inclusion lattice violated: " + _shrunk_counterexample(inf, fails)
    return None


def _prop_operational_duality(rng, variables, max_depth, standards):
    inf = random_inference(rng, variables, max_depth)
    pairs = (("K3", "LP"), ("LP", "K3"), ("ST", "ST"), ("TS", "TS"))

    def fails(candidate: Inference) -> bool:
        dual = op_dual_inference(candidate)
        return any(
            valid(standards[a], candidate).valid != valid(standards[b], dual).valid
            for a, b in pairs
        )

    if fails(inf):
        return "operational duality violated: " + _shrunk_counterexample(inf, fails)
    return None


def _prop_structural_duality(rng, variables, max_depth, standards):
    inf = random_inference(rng, variables, max_depth)
    pairs = (("K3", "K3"), ("LP", "LP"), ("ST", "TS"), ("TS", "ST"))

    def fails(candidate: Inference) -> bool:
        inverse = invert(candidate)
        return any(
            valid(standards[a], candidate).valid != antivalid(standards[b], inverse).valid
            for a, b in pairs
        )

    if fails(inf):
        return "structural duality violated: " + _shrunk_counterexample(inf, fails)
    return None


def _prop_sum_extraction(rng, variables, max_depth, standards):
    inf = random_inference(rng, variables, max_depth)
    k3, lp, st = standards["K3"], standards["LP"], standards["ST"]

    def fails(candidate: Inference) -> bool:
        by_sum = sum_equals_antitheorems_plus_theorems(k3, lp, candidate)
        by_st = is_antitheorem(st, candidate.premises) or is_theorem(st, candidate.conclusions)
        return by_sum != by_st

    if fails(inf):
        return "sum extraction disagrees with ST theorems/antitheorems: " + _shrunk_counterexample(inf, fails)
    return None


_PROPERTIES = (
    ("parse/print round-trip", _prop_roundtrip),
    ("classical values stable under sharpening", _prop_monotonicity),
    ("all-1/2 valuation maximality", _prop_all_half),
    ("K3-DNF equivalence", _prop_dnf_equivalence),
    ("ST product witness", _prop_st_product),
    ("TS sum membership", _prop_ts_sum),
    ("validity inclusion lattice", _prop_lattice),
    ("operational duality", _prop_operational_duality),
    ("structural duality", _prop_structural_duality),
    ("relative sum extracts antitheorems/theorems", _prop_sum_extraction),
)


def run_oracle(
    max_vars: int,
    max_depth: int,
    samples: int,
    seed: int,
    standards: Optional[dict] = None,
) -> OracleReport:
    if max_vars < 1 or max_depth < 1 or samples < 1:
        raise ValueError("bounds must be positive and samples >= 1")
    if standards is None:
        standards = STANDARDS
    variables = variable_pool(max_vars)
    results = []
    for name, prop in _PROPERTIES:
        rng = random.Random(f"{seed}:{name}")
        counterexample = None
        ran = 0
        for _ in range(samples):
            ran += 1
            counterexample = prop(rng, variables, max_depth, standards)
            if counterexample is not None:
                break
        results.append(PropertyResult(name, ran, counterexample is None, counterexample))
    return OracleReport(results)
