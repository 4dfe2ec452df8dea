import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from mixcons.formula import (
    Inference,
    Var,
    atoms,
    parse_formula,
    parse_sequent,
    print_formula,
    BOT,
    LAM,
    TOP,
)
from mixcons.semantics import HALF, ONE, ZERO, Valuation
from mixcons.consequence import K3, LP, ST, TS, antivalid, satisfies, valid
from mixcons.decomposition import (
    AlwaysOneConclusion,
    AlwaysZeroPremise,
    DecompositionFailure,
    LambdaNotAllowedError,
    MilneFailure,
    PreconditionError,
    ProductWitness,
    SumRefutation,
    gamma_v_conjunction,
    k3_dnf,
    lp_k3_connector_lambda_free,
    lp_k3_product_universal_witness,
    milne_interpolant,
    st_connecting_formula,
    st_minus_sum_decision,
    sum_equals_antitheorems_plus_theorems,
    ts_minus_product_decision,
    ts_sum_decision,
)
from mixcons.duality import invert

from conftest import (
    inferences,
    lambda_free_formulas,
    lambda_free_inferences,
    formulas,
)
from oracles import brute_equivalent

MIXED_EXAMPLE = parse_sequent("p | (q & ~q) => p & (q | ~q)")
PRINTED_CONNECTOR = parse_formula("(p & q) | (p & ~q) | p")


class TestGammaVConjunction:
    def test_half_atom_dropped(self):
        gamma = (parse_formula("p | (q & ~q)"),)
        v = Valuation({"p": ONE, "q": HALF})
        assert gamma_v_conjunction(gamma, v) == Var("p")

    def test_all_classical(self):
        gamma = (parse_formula("p & q"),)
        v = Valuation({"p": ONE, "q": ONE})
        assert print_formula(gamma_v_conjunction(gamma, v)) == "p & q"

    def test_literal_signs(self):
        gamma = (parse_formula("p | q"),)
        v = Valuation({"p": ONE, "q": ZERO})
        assert print_formula(gamma_v_conjunction(gamma, v)) == "p & ~q"

    def test_precondition_enforced(self):
        with pytest.raises(PreconditionError):
            gamma_v_conjunction((Var("p"),), Valuation({"p": HALF}))
        with pytest.raises(PreconditionError):
            gamma_v_conjunction((), Valuation({}))

    @given(formulas, st.data())
    def test_result_strictly_true_under_v(self, f, data):
        from mixcons.semantics import enumerate_valuations, eval_formula

        strict = [v for v in enumerate_valuations(atoms(f)) if eval_formula(f, v) == ONE]
        if not strict:
            return
        v = data.draw(st.sampled_from(strict))
        assert eval_formula(gamma_v_conjunction((f,), v), v) == ONE


class TestK3Dnf:
    def test_known_connector_up_to_equivalence(self):
        dnf = k3_dnf((parse_formula("p | (q & ~q)"),))
        assert brute_equivalent(dnf, PRINTED_CONNECTOR)

    def test_unsatisfiable_premises(self):
        assert k3_dnf((parse_formula("p & ~p"),)) == BOT

    def test_single_atom(self):
        assert k3_dnf((Var("p"),)) == Var("p")

    @given(st.lists(lambda_free_formulas, min_size=1, max_size=2))
    def test_equivalence_lemma(self, gamma):
        gamma = tuple(gamma)
        dnf = k3_dnf(gamma)
        assert valid(K3, Inference(gamma, (dnf,))).valid
        from mixcons.formula import conjoin

        assert valid(K3, Inference((dnf,), (conjoin(gamma),))).valid


class TestStProduct:
    def test_worked_example(self):
        witness = st_connecting_formula(MIXED_EXAMPLE)
        assert isinstance(witness, ProductWitness)
        assert brute_equivalent(witness.connector, PRINTED_CONNECTOR)
        assert witness.left_check.valid and witness.right_check.valid

    def test_empty_premises_use_top(self):
        witness = st_connecting_formula(parse_sequent("=> p | ~p"))
        assert isinstance(witness, ProductWitness)
        assert witness.connector == TOP

    def test_failure_case(self):
        inf = parse_sequent("p | ~p => p & ~p")
        outcome = st_connecting_formula(inf)
        assert isinstance(outcome, DecompositionFailure)
        # first failing valuation in enumeration order
        assert outcome.countermodel.assignments == {"p": ZERO}
        assert not satisfies(ST, outcome.countermodel, inf)

    @given(inferences)
    def test_theorem(self, inf):
        outcome = st_connecting_formula(inf)
        if valid(ST, inf).valid:
            assert isinstance(outcome, ProductWitness)
            connector = outcome.connector
            assert valid(K3, Inference(inf.premises, (connector,))).valid
            assert valid(LP, Inference((connector,), inf.conclusions)).valid
        else:
            assert isinstance(outcome, DecompositionFailure)
            assert not satisfies(ST, outcome.countermodel, inf)


class TestTsSum:
    def test_constant_false_premise(self):
        decision = ts_sum_decision(parse_sequent("p & F => q"))
        assert decision.member
        assert isinstance(decision.reason, AlwaysZeroPremise)
        assert print_formula(decision.reason.formula) == "p & F"

    def test_constant_true_conclusion(self):
        decision = ts_sum_decision(parse_sequent("=> q | T"))
        assert decision.member
        assert isinstance(decision.reason, AlwaysOneConclusion)

    def test_refutation_for_reflexivity(self):
        decision = ts_sum_decision(parse_sequent("p => p"))
        assert not decision.member
        refutation = decision.reason
        assert isinstance(refutation, SumRefutation)
        assert refutation.pivot == Var("p0")
        assert refutation.left_fail.assignments == {"p": HALF, "p0": ZERO}
        assert refutation.right_fail.assignments == {"p": HALF, "p0": ONE}

    @given(inferences)
    def test_theorem(self, inf):
        decision = ts_sum_decision(inf)
        assert decision.member == valid(TS, inf).valid
        if not decision.member:
            refutation = decision.reason
            left = Inference(inf.premises, (refutation.pivot,))
            right = Inference((refutation.pivot,), inf.conclusions)
            assert not satisfies(LP, refutation.left_fail, left)
            assert not satisfies(K3, refutation.right_fail, right)


class TestLpK3Product:
    def test_universal_lambda_witness(self):
        for text in ("T => F", "p => q", "=>"):
            witness = lp_k3_product_universal_witness(parse_sequent(text))
            assert witness.connector == LAM
            assert witness.left_check.valid and witness.right_check.valid

    def test_lambda_free_main_case(self):
        witness = lp_k3_connector_lambda_free(MIXED_EXAMPLE)
        assert isinstance(witness, ProductWitness)
        expected = parse_formula("(p | (q & ~q)) & (p | ~p) & (q | ~q)")
        assert brute_equivalent(witness.connector, expected)

    def test_lambda_free_bot_case(self):
        witness = lp_k3_connector_lambda_free(parse_sequent("F & p => q"))
        assert isinstance(witness, ProductWitness)
        assert witness.connector == BOT

    def test_lambda_free_top_case(self):
        witness = lp_k3_connector_lambda_free(parse_sequent("p => q | T"))
        assert isinstance(witness, ProductWitness)
        assert witness.connector == TOP

    def test_lambda_rejected(self):
        with pytest.raises(LambdaNotAllowedError):
            lp_k3_connector_lambda_free(parse_sequent("T => L"))

    @given(lambda_free_inferences)
    def test_succeeds_exactly_on_st_validity(self, inf):
        outcome = lp_k3_connector_lambda_free(inf)
        if valid(ST, inf).valid:
            assert isinstance(outcome, ProductWitness)
            connector = outcome.connector
            assert valid(LP, Inference(inf.premises, (connector,))).valid
            assert valid(K3, Inference((connector,), inf.conclusions)).valid
        else:
            assert isinstance(outcome, DecompositionFailure)


class TestMilne:
    def test_worked_example(self):
        phi = parse_formula("p | (q & ~q)")
        psi = parse_formula("p & (r | ~r)")
        assert milne_interpolant(phi, psi) == Var("p")

    def test_shared_atom_collapse(self):
        assert milne_interpolant(parse_formula("p & q"), Var("p")) == Var("p")

    def test_tautology_rejected(self):
        outcome = milne_interpolant(Var("p"), parse_formula("q | ~q"))
        assert isinstance(outcome, MilneFailure)
        assert outcome.reason == "tautology"

    def test_contradiction_rejected(self):
        outcome = milne_interpolant(parse_formula("p & ~p"), Var("q"))
        assert isinstance(outcome, MilneFailure)
        assert outcome.reason == "contradiction"

    def test_invalid_inference_rejected(self):
        outcome = milne_interpolant(Var("p"), Var("q"))
        assert isinstance(outcome, MilneFailure)
        assert outcome.reason == "invalid-inference"

    def test_lambda_rejected(self):
        outcome = milne_interpolant(LAM, Var("p"))
        assert isinstance(outcome, MilneFailure)
        assert outcome.reason == "lambda-present"

    @given(lambda_free_formulas, lambda_free_formulas)
    def test_interpolant_properties(self, phi, psi):
        outcome = milne_interpolant(phi, psi)
        if isinstance(outcome, MilneFailure):
            return
        assert atoms(outcome) <= (atoms(phi) & atoms(psi)) | {"T", "F"}
        assert valid(K3, Inference((phi,), (outcome,))).valid
        assert valid(LP, Inference((outcome,), (psi,))).valid


class TestAntivalidityDecompositions:
    def test_st_minus_examples(self):
        assert st_minus_sum_decision(parse_sequent("q => p & F"))
        assert not st_minus_sum_decision(parse_sequent("p => p"))
        assert not st_minus_sum_decision(parse_sequent("F => T"))

    def test_ts_minus_member_with_connector(self):
        result = ts_minus_product_decision(parse_sequent("p & (q | ~q) => p | (q & ~q)"))
        assert result.member
        assert brute_equivalent(result.connector, PRINTED_CONNECTOR)
        assert result.left_check.valid and result.right_check.valid

    def test_ts_minus_non_members(self):
        assert not ts_minus_product_decision(parse_sequent("p & ~p => p | ~p")).member
        assert not ts_minus_product_decision(parse_sequent("F => T")).member

    @given(inferences)
    def test_ts_minus_matches_antivalidity(self, inf):
        result = ts_minus_product_decision(inf)
        assert result.member == antivalid(TS, inf).valid
        if result.member:
            connector = result.connector
            assert antivalid(LP, Inference(inf.premises, (connector,))).valid
            assert antivalid(K3, Inference((connector,), inf.conclusions)).valid

    @given(inferences)
    def test_st_minus_matches_antivalidity(self, inf):
        assert st_minus_sum_decision(inf) == antivalid(ST, inf).valid


class TestSumExtraction:
    def test_examples(self):
        assert sum_equals_antitheorems_plus_theorems(K3, LP, parse_sequent("p & ~p => q"))
        assert sum_equals_antitheorems_plus_theorems(K3, LP, parse_sequent("=> p | ~p"))
        assert not sum_equals_antitheorems_plus_theorems(LP, K3, parse_sequent("p => p"))

    @given(inferences)
    def test_k3_lp_sum_equals_st_facts(self, inf):
        from mixcons.consequence import is_antitheorem, is_theorem

        by_sum = sum_equals_antitheorems_plus_theorems(K3, LP, inf)
        by_st = is_antitheorem(ST, inf.premises) or is_theorem(ST, inf.conclusions)
        assert by_sum == by_st


def _relations(universe):
    pairs = list(itertools.product(universe, repeat=2))
    for bits in itertools.product((False, True), repeat=len(pairs)):
        yield frozenset(pair for pair, bit in zip(pairs, bits) if bit)


def _rel_product(r, s, universe, middles):
    return frozenset(
        (x, z)
        for x in universe
        for z in universe
        if any((x, y) in r and (y, z) in s for y in middles)
    )


def _rel_sum(r, s, universe, middles):
    return frozenset(
        (x, z)
        for x in universe
        for z in universe
        if all((x, y) in r or (y, z) in s for y in middles)
    )


class TestAbstractProductSumDuality:
    """De Morgan duality of relative product and sum, checked exhaustively
    on all relations over a two-element universe."""

    def test_duality_and_inverse_laws(self):
        universe = (0, 1)
        full = frozenset(itertools.product(universe, repeat=2))
        middle_sets = [(0,), (1,), (0, 1)]
        rels = list(_relations(universe))
        for r in rels:
            for s in rels:
                for middles in middle_sets:
                    product = _rel_product(r, s, universe, middles)
                    sum_ = _rel_sum(r, s, universe, middles)
                    assert product == full - _rel_sum(full - r, full - s, universe, middles)
                    assert sum_ == full - _rel_product(full - r, full - s, universe, middles)
                    inv = lambda rel: frozenset((y, x) for x, y in rel)
                    assert inv(product) == _rel_product(inv(s), inv(r), universe, middles)
                    assert inv(sum_) == _rel_sum(inv(s), inv(r), universe, middles)
