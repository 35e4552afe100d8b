"""Prime implicate compilation for modal logic K.

Parse formulas, convert them to modal clauses, compile a knowledge base
into its prime implicates with the direct resolution calculus, and answer
entailment queries from the compiled set.  A tableau decides K entailment
throughout; a bounded brute-force enumerator provides independent ground
truth at test scale.
"""

from .brute import enumerate_clauses, prime_implicates_brute, within_bounds
from .cnf import nnf, single_clause, to_cnf
from .errors import (
    BudgetExceeded,
    ClauseBudgetExceeded,
    KPrimeError,
    ParseError,
    RecursionDepthExceeded,
    TableauBudgetExceeded,
)
from .normalization import canonical_key, is_normal, make_clause, make_cnf, simplify, simplify_cnf
from .parser import parse, render
from .pic import (
    EntailmentOracle,
    PicConfig,
    PicResult,
    StageRecord,
    answer_query,
    clause_entails,
    covering_implicate,
    default_oracle,
    is_implicate,
    prime_implicates,
    prime_implicates_traced,
    residue,
    residue_detailed,
    subsumes,
    subsumption_reduce,
)
from .resolution import (
    ResolutionStep,
    closure_step,
    closure_step_traced,
    gamma_resolvents,
    sigma_resolvents,
)
from .semantics import (
    KripkeModel,
    SatResult,
    Tableau,
    default_tableau,
    enumerate_tree_models,
    local_entails,
    model_check,
    satisfiable,
)
from .syntax import (
    BOT,
    BOTTOM_CLAUSE,
    And,
    Bottom,
    Box,
    Clause,
    Cnf,
    Diamond,
    Formula,
    Literal,
    Not,
    Or,
    Var,
    clause_length,
    clause_to_formula,
    clause_to_json,
    clause_from_json,
    cnf_length,
    cnf_to_formula,
    length,
    modal_depth,
    variables,
)

__all__ = [name for name in dir() if not name.startswith("_")]
