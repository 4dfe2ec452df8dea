"""Three-valued consequence toolkit for the Strong-Kleene logics K3, LP, ST, TS.

Decides validity and antivalidity, constructs connecting formulas for the
mixed logics, applies duality maps, and builds interpolants.
"""

from .formula import (
    And,
    Bot,
    Formula,
    Inference,
    Lambda,
    Not,
    Or,
    ParseError,
    Top,
    Var,
    BOT,
    LAM,
    TOP,
    atoms,
    parse_formula,
    parse_sequent,
    print_formula,
    print_sequent,
)
from .semantics import (
    HALF,
    ONE,
    ZERO,
    TruthValue,
    Valuation,
    all_half_valuation,
    enumerate_valuations,
    eval_formula,
)
from .consequence import (
    K3,
    LP,
    ST,
    STANDARDS,
    TS,
    LogicStandard,
    Verdict,
    antivalid,
    classically_valid,
    is_antitheorem,
    is_theorem,
    valid,
)
from .decomposition import (
    DecompositionFailure,
    LambdaNotAllowedError,
    MilneFailure,
    ProductWitness,
    SumRefutation,
    TsSumDecision,
    k3_dnf,
    lp_k3_connector_lambda_free,
    lp_k3_product_universal_witness,
    milne_interpolant,
    st_connecting_formula,
    ts_sum_decision,
)
from .duality import (
    ROUTES,
    direct_membership,
    dual_set_membership,
    invert,
    neg_dual_inference,
    op_dual,
    op_dual_inference,
)
from .oracle import OracleReport, PropertyResult, run_oracle

__version__ = "0.1.0"
