"""Constructive decompositions of ST and TS validity.

ST-validity is witnessed by a single connecting formula: the K3
disjunctive normal form of the conjoined premises, which the premises
K3-entail and which LP-entails the conclusions.  TS-validity holds
exactly when some premise is constantly false or some conclusion
constantly true; when it fails, a fresh pivot variable refutes membership
in the relative sum.  On the lambda-free fragment the product also works
with LP on the left and K3 on the right; with lambda available, that
product is universal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .formula import (
    And,
    Formula,
    Inference,
    Not,
    Or,
    Var,
    atom_to_formula,
    atoms,
    atoms_of_set,
    conjoin,
    contains_lambda,
    disjoin,
    fresh_variable,
    is_variable_atom,
    BOT,
    TOP,
    LAM,
)
from .semantics import (
    HALF,
    ONE,
    ZERO,
    Valuation,
    all_half_valuation,
    enumerate_valuations,
    eval_formula,
)
from .consequence import (
    K3,
    LP,
    ST,
    TS,
    Verdict,
    antivalid,
    classically_valid,
    is_antitheorem,
    is_theorem,
    valid,
)


class PreconditionError(ValueError):
    pass


class LambdaNotAllowedError(ValueError):
    pass


@dataclass
class ProductWitness:
    """Connecting formula plus the two component validity checks."""

    connector: Formula
    left_check: Verdict
    right_check: Verdict


@dataclass
class DecompositionFailure:
    """Non-membership, carrying the refuting valuation."""

    countermodel: Valuation


@dataclass
class SumRefutation:
    """Fresh pivot refuting relative-sum membership on both sides."""

    pivot: Formula
    left_fail: Valuation
    right_fail: Valuation


@dataclass(frozen=True)
class AlwaysZeroPremise:
    formula: Formula


@dataclass(frozen=True)
class AlwaysOneConclusion:
    formula: Formula


TsSumReason = Union[AlwaysZeroPremise, AlwaysOneConclusion, SumRefutation]


@dataclass
class TsSumDecision:
    member: bool
    reason: TsSumReason


@dataclass
class TsMinusProduct:
    member: bool
    connector: Optional[Formula] = None
    left_check: Optional[Verdict] = None
    right_check: Optional[Verdict] = None


def gamma_v_conjunction(gamma: Iterable[Formula], v: Valuation) -> Formula:
    """Conjunction of the literals classical under v, over the atoms of gamma.

    Requires every member of gamma to be strictly true under v; then some
    atom is classical, so the conjunction is nonempty.
    """
    gamma = tuple(gamma)
    if not gamma:
        raise PreconditionError("gamma must be nonempty")
    for g in gamma:
        if eval_formula(g, v) != ONE:
            raise PreconditionError(
                f"premise not strictly true under the given valuation: {g!r}"
            )
    literals: list[Formula] = []
    for atom in sorted(atoms_of_set(gamma)):
        value = v.value_of(atom)
        if value == ONE:
            literals.append(atom_to_formula(atom))
        elif value == ZERO:
            literals.append(Not(atom_to_formula(atom)))
    assert literals, "some atom must be classical when all premises are strictly true"
    return conjoin(literals)


def k3_dnf(gamma: Iterable[Formula]) -> Formula:
    """K3 disjunctive normal form of the conjoined premises.

    One disjunct per strictly-satisfying valuation, in enumeration order,
    duplicates removed; F when no valuation strictly satisfies.
    """
    gamma = tuple(gamma)
    if not gamma:
        raise PreconditionError("gamma must be nonempty")
    disjuncts: list[Formula] = []
    seen: set[Formula] = set()
    for v in enumerate_valuations(atoms_of_set(gamma)):
        if all(eval_formula(g, v) == ONE for g in gamma):
            c = gamma_v_conjunction(gamma, v)
            if c not in seen:
                seen.add(c)
                disjuncts.append(c)
    return disjoin(disjuncts) if disjuncts else BOT


def st_connecting_formula(inf: Inference) -> Union[ProductWitness, DecompositionFailure]:
    """Product witness for ST-validity: K3 to the connector, LP onward.

    The connector is T for an empty premise side, otherwise the K3-DNF of
    the premises.  Returns a failure with the ST countermodel when the
    inference is not ST-valid.
    """
    verdict = valid(ST, inf)
    if not verdict.valid:
        assert verdict.countermodel is not None
        return DecompositionFailure(verdict.countermodel)
    connector = TOP if not inf.premises else k3_dnf(inf.premises)
    left = valid(K3, Inference(inf.premises, (connector,)))
    right = valid(LP, Inference((connector,), inf.conclusions))
    assert left.valid and right.valid
    return ProductWitness(connector, left, right)


def _constant_value(f: Formula, target) -> bool:
    return all(eval_formula(f, v) == target for v in enumerate_valuations(atoms(f)))


def ts_sum_decision(inf: Inference) -> TsSumDecision:
    """Membership in the relative sum characterizing TS-validity.

    A member owes its validity to a constantly-false premise or a
    constantly-true conclusion; a non-member is refuted by a fresh pivot
    variable set to 0 and to 1 atop a TS-falsifying valuation.
    """
    verdict = valid(TS, inf)
    if verdict.valid:
        for g in inf.premises:
            if _constant_value(g, ZERO):
                return TsSumDecision(True, AlwaysZeroPremise(g))
        for d in inf.conclusions:
            if _constant_value(d, ONE):
                return TsSumDecision(True, AlwaysOneConclusion(d))
        raise AssertionError("TS-valid inference with no constant witness")
    assert verdict.countermodel is not None
    pivot_name = fresh_variable(inf.atoms())
    base = verdict.countermodel
    refutation = SumRefutation(
        pivot=Var(pivot_name),
        left_fail=base.with_assignment(pivot_name, ZERO),
        right_fail=base.with_assignment(pivot_name, ONE),
    )
    return TsSumDecision(False, refutation)


def lp_k3_product_universal_witness(inf: Inference) -> ProductWitness:
    """The constant lambda connects any inference in the LP-then-K3 product."""
    left = valid(LP, Inference(inf.premises, (LAM,)))
    right = valid(K3, Inference((LAM,), inf.conclusions))
    assert left.valid and right.valid
    return ProductWitness(LAM, left, right)


def lp_k3_connector_lambda_free(inf: Inference) -> Union[ProductWitness, DecompositionFailure]:
    """LP-then-K3 product witness on the lambda-free fragment.

    The connector is F when the premises are jointly LP-unsatisfiable, T
    when every valuation makes some conclusion strictly true, otherwise
    the conjoined premises together with excluded middle over every atom
    of the conclusions.
    """
    for f in list(inf.premises) + list(inf.conclusions):
        if contains_lambda(f):
            raise LambdaNotAllowedError(
                "lambda-free construction; the full language is handled by the "
                "universal lambda witness"
            )
    verdict = valid(ST, inf)
    if not verdict.valid:
        assert verdict.countermodel is not None
        return DecompositionFailure(verdict.countermodel)

    premise_atoms = atoms_of_set(inf.premises)
    lp_satisfiable = any(
        all(eval_formula(g, v) != ZERO for g in inf.premises)
        for v in enumerate_valuations(premise_atoms)
    )
    if not lp_satisfiable:
        connector: Formula = BOT
    else:
        conclusion_atoms = atoms_of_set(inf.conclusions)
        always_strict = all(
            any(eval_formula(d, v) == ONE for d in inf.conclusions)
            for v in enumerate_valuations(conclusion_atoms)
        )
        if always_strict:
            connector = TOP
        else:
            tautologies = [
                Or(atom_to_formula(a), Not(atom_to_formula(a)))
                for a in sorted(conclusion_atoms)
            ]
            connector = And(conjoin(inf.premises), conjoin(tautologies))
    left = valid(LP, Inference(inf.premises, (connector,)))
    right = valid(K3, Inference((connector,), inf.conclusions))
    assert left.valid and right.valid
    return ProductWitness(connector, left, right)


@dataclass
class MilneFailure:
    reason: str  # one of: lambda-present, invalid-inference, contradiction, tautology


def milne_interpolant(phi: Formula, psi: Formula) -> Union[Formula, MilneFailure]:
    """Interpolant for a classically valid single-premise inference.

    Same construction as the K3-DNF connector, with each disjunct's
    literals restricted to the atoms shared by both sides; a disjunct with
    no remaining literals becomes T.  The result is K3-entailed by `phi`
    and LP-entails `psi`.
    """
    if contains_lambda(phi) or contains_lambda(psi):
        return MilneFailure("lambda-present")
    if not classically_valid(Inference((phi,), (psi,))):
        return MilneFailure("invalid-inference")
    if classically_valid(Inference((), (Not(phi),))):
        return MilneFailure("contradiction")
    if classically_valid(Inference((), (psi,))):
        return MilneFailure("tautology")

    shared = atoms(phi) & atoms(psi)
    disjuncts: list[Formula] = []
    seen: set[Formula] = set()
    for v in enumerate_valuations(atoms(phi)):
        if eval_formula(phi, v) != ONE:
            continue
        literals: list[Formula] = []
        for atom in sorted(shared):
            value = v.value_of(atom)
            if value == ONE:
                literals.append(atom_to_formula(atom))
            elif value == ZERO:
                literals.append(Not(atom_to_formula(atom)))
        disjunct = conjoin(literals) if literals else TOP
        if disjunct not in seen:
            seen.add(disjunct)
            disjuncts.append(disjunct)
    assert disjuncts, "a classically satisfiable premise has a strict valuation"
    return disjoin(disjuncts)


def st_minus_sum_decision(inf: Inference) -> bool:
    """Membership in the sum of K3- and LP-antivalidities (= ST-antivalidity).

    Cross-checked against TS-validity of the inverted inference.
    """
    direct = antivalid(ST, inf).valid
    via_inverse = valid(TS, Inference(inf.conclusions, inf.premises)).valid
    if direct != via_inverse:
        raise AssertionError("structural duality violated between ST- and TS+")
    return direct


def ts_minus_product_decision(inf: Inference) -> TsMinusProduct:
    """Membership in the product of LP- and K3-antivalidities (= TS-antivalidity).

    On membership the connector is the ST product connector of the
    inverted inference, reused in mirrored position; the component checks
    are LP- and K3-antivalidity.
    """
    if not antivalid(TS, inf).valid:
        return TsMinusProduct(False)
    inverse = Inference(inf.conclusions, inf.premises)
    witness = st_connecting_formula(inverse)
    assert isinstance(witness, ProductWitness)
    connector = witness.connector
    left = antivalid(LP, Inference(inf.premises, (connector,)))
    right = antivalid(K3, Inference((connector,), inf.conclusions))
    assert left.valid and right.valid
    return TsMinusProduct(True, connector, left, right)


def sum_equals_antitheorems_plus_theorems(logic_left, logic_right, inf: Inference) -> bool:
    """Decision procedure for membership in the relative sum of two logics.

    The sum extracts the antitheorems of the first operand and the
    theorems of the second.
    """
    return is_antitheorem(logic_left, inf.premises) or is_theorem(logic_right, inf.conclusions)
