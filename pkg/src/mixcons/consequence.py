"""The four consequence relations over the Strong-Kleene scheme.

A logic standard is a pair of designated-value sets: one for premises,
one for conclusions.  K3 and LP use the same set on both sides; ST and TS
mix strict and tolerant designation.  Validity and antivalidity are both
decided by enumerating the finitely many valuations over the atoms that
actually occur in the inference.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .formula import (
    Formula,
    Inference,
    Not,
    Var,
    atoms,
    atoms_of_set,
    atom_to_formula,
    fresh_variable,
    print_sequent,
    TOP,
    BOT,
    LAM,
)
from .semantics import (
    ONE,
    TruthValue,
    Valuation,
    enumerate_valuations,
    eval_formula,
    valuation_record,
)


@dataclass(frozen=True)
class LogicStandard:
    name: str
    premise_designated: frozenset[TruthValue]
    conclusion_designated: frozenset[TruthValue]


_STRICT = frozenset({TruthValue.ONE})
_TOLERANT = frozenset({TruthValue.HALF, TruthValue.ONE})

K3 = LogicStandard("K3", _STRICT, _STRICT)
LP = LogicStandard("LP", _TOLERANT, _TOLERANT)
ST = LogicStandard("ST", _STRICT, _TOLERANT)
TS = LogicStandard("TS", _TOLERANT, _STRICT)

STANDARDS = {"K3": K3, "LP": LP, "ST": ST, "TS": TS}


@dataclass
class Verdict:
    valid: bool
    countermodel: Optional[Valuation] = None


def satisfies(logic: LogicStandard, v: Valuation, inf: Inference) -> bool:
    """Designated premises (all) imply a designated conclusion (some)."""
    if all(eval_formula(g, v) in logic.premise_designated for g in inf.premises):
        return any(eval_formula(d, v) in logic.conclusion_designated for d in inf.conclusions)
    return True


def antisatisfies(logic: LogicStandard, v: Valuation, inf: Inference) -> bool:
    """Non-designated premises (all) imply a non-designated conclusion (some)."""
    if all(eval_formula(g, v) not in logic.premise_designated for g in inf.premises):
        return any(eval_formula(d, v) not in logic.conclusion_designated for d in inf.conclusions)
    return True


def valid(logic: LogicStandard, inf: Inference) -> Verdict:
    for v in enumerate_valuations(inf.atoms()):
        if not satisfies(logic, v, inf):
            return Verdict(False, v)
    return Verdict(True)


def antivalid(logic: LogicStandard, inf: Inference) -> Verdict:
    for v in enumerate_valuations(inf.atoms()):
        if not antisatisfies(logic, v, inf):
            return Verdict(False, v)
    return Verdict(True)


def is_antitheorem(logic: LogicStandard, gamma: Iterable[Formula]) -> bool:
    return valid(logic, Inference(gamma, ())).valid


def is_theorem(logic: LogicStandard, delta: Iterable[Formula]) -> bool:
    return valid(logic, Inference((), delta)).valid


def is_trivial_theorem_or_antitheorem(formulas: Iterable[Formula]) -> bool:
    """True iff some member takes the same value under every valuation."""
    for f in formulas:
        values = {eval_formula(f, v) for v in enumerate_valuations(atoms(f))}
        if len(values) == 1:
            return True
    return False


def classically_valid(inf: Inference) -> bool:
    """Two-valued validity, enumerating only the values 0 and 1.

    Meaningful on the lambda-free fragment, where it coincides with
    ST-validity.
    """
    names = sorted(inf.variables())
    for values in itertools.product((TruthValue.ZERO, TruthValue.ONE), repeat=len(names)):
        v = Valuation(dict(zip(names, values)))
        if all(eval_formula(g, v) == ONE for g in inf.premises):
            if not any(eval_formula(d, v) == ONE for d in inf.conclusions):
                return False
    return True


def _sample_pool(formulas: Iterable[Formula]) -> tuple[list[Formula], Formula]:
    """Bounded formula sample over the atoms of `formulas`, plus a fresh variable."""
    ats = sorted(atoms_of_set(formulas))
    fresh = Var(fresh_variable(ats))
    pool: list[Formula] = [TOP, BOT, LAM, fresh]
    for a in ats:
        f = atom_to_formula(a)
        pool.append(f)
        pool.append(Not(f))
    return pool, fresh


def antitheorem_equivalences_hold(logic: LogicStandard, gamma: Iterable[Formula]) -> bool:
    """Oracle: the four standard characterizations of antitheoremhood agree.

    The universally quantified clauses (all conclusion sets, all single
    conclusions) are checked on a bounded sample that includes a fresh
    variable; for designated-value logics the fresh-variable clause is
    equivalent to the universal ones, so the sample decides correctly.
    """
    gamma = tuple(gamma)
    c_antitheorem = is_antitheorem(logic, gamma)
    pool, fresh = _sample_pool(gamma)
    delta_samples: list[tuple[Formula, ...]] = [(), (fresh,), tuple(pool)]
    delta_samples += [(phi,) for phi in pool]
    c_all_sets = all(valid(logic, Inference(gamma, d)).valid for d in delta_samples)
    c_all_formulas = all(valid(logic, Inference(gamma, (phi,))).valid for phi in pool)
    c_fresh = valid(logic, Inference(gamma, (fresh,))).valid
    return len({c_antitheorem, c_all_sets, c_all_formulas, c_fresh}) == 1


def theorem_equivalences_hold(logic: LogicStandard, delta: Iterable[Formula]) -> bool:
    """Symmetric oracle for the theorem characterizations."""
    delta = tuple(delta)
    c_theorem = is_theorem(logic, delta)
    pool, fresh = _sample_pool(delta)
    gamma_samples: list[tuple[Formula, ...]] = [(), (fresh,), tuple(pool)]
    gamma_samples += [(phi,) for phi in pool]
    c_all_sets = all(valid(logic, Inference(g, delta)).valid for g in gamma_samples)
    c_all_formulas = all(valid(logic, Inference((phi,), delta)).valid for phi in pool)
    c_fresh = valid(logic, Inference((fresh,), delta)).valid
    return len({c_theorem, c_all_sets, c_all_formulas, c_fresh}) == 1


def verdict_record(logic: LogicStandard, inf: Inference, verdict: Verdict, anti: bool = False) -> dict:
    """Machine-readable verdict: {logic, sequent, valid|antivalid, countermodel}."""
    key = "antivalid" if anti else "valid"
    return {
        "logic": logic.name,
        "sequent": print_sequent(inf),
        key: verdict.valid,
        "countermodel": valuation_record(verdict.countermodel),
    }
