"""Direct resolution on modal clauses.

Two-premise resolvents come from an axiom on complementary literals (or on
a bottom premise) lifted through three rules: remainders of both clauses
are threaded around the active pair, two boxes resolve into a boxed
resolvent, and a box against a diamond resolves the box body into one
member of the diamond's clause set, which keeps its premises and gains the
resolvent.  Single-premise resolvents act inside one clause: a resolvable
pair within a diamond's set grows that set, a member's own resolvent grows
it likewise, and boxes recurse.  Every conclusion is returned in normal
form with a witness derivation tree.

Two extra rules back the covering guarantee.  A box body is absorbed into
every diamond of the partner premise outright (every successor satisfies
the body, so each diamond's witness does); without it, clause sets whose
box bodies share no complementary literals with any diamond member
produce no resolvents at all, yet still have uncovered implicates such as
a bare negated-variable diamond.  And a box component splits on whether a
successor exists at all, seeding a diamond with its body for absorption
to pack; without it, diamond-free clause sets cover none of their
no-successor-or-witness consequences.

The one-step closure of a clause set adds every resolvent of every pair
(including a clause with itself) and of every single clause; saturation
across steps is the compiler's job, not this module's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClauseBudgetExceeded, RecursionDepthExceeded
from .normalization import simplify, simplify_cnf
from .syntax import (
    BOTTOM_CLAUSE,
    Clause,
    clause_key,
    sorted_clauses,
)

DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class ResolutionStep:
    """One rule application; sub holds the derivation it was lifted from."""

    rule: str
    premises: tuple
    conclusion: Clause
    sub: tuple = ()

    def node_count(self) -> int:
        return 1 + sum(s.node_count() for s in self.sub)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "premises": [str(p) for p in self.premises],
            "conclusion": str(self.conclusion),
            "sub": [s.to_json() for s in self.sub],
        }


def _unit_lit(lit) -> Clause:
    return Clause(literals=frozenset((lit,)))


def _unit_box(body: Clause) -> Clause:
    return Clause(boxes=frozenset((body,)))


def _unit_dia(body) -> Clause:
    return Clause(diamonds=frozenset((body,)))


def _union(*clauses: Clause) -> Clause:
    lits, boxes, dias = frozenset(), frozenset(), frozenset()
    for c in clauses:
        lits |= c.literals
        boxes |= c.boxes
        dias |= c.diamonds
    return Clause(lits, boxes, dias)


def _wrap_sigma(a: Clause, b: Clause, core: ResolutionStep, rem_a: Clause, rem_b: Clause) -> ResolutionStep:
    """Thread the untouched disjuncts of both premises around a core resolvent."""
    if rem_a.is_bottom and rem_b.is_bottom:
        return core
    conclusion = _union(rem_a, rem_b, core.conclusion)
    return ResolutionStep("sigma-or", (a, b), conclusion, (core,))


def _wrap_gamma(a: Clause, core: ResolutionStep, rem: Clause) -> ResolutionStep:
    if rem.is_bottom:
        return core
    conclusion = _union(rem, core.conclusion)
    return ResolutionStep("gamma-or", (a,), conclusion, (core,))


def _sigma(a: Clause, b: Clause, depth: int) -> list:
    if depth < 0:
        raise RecursionDepthExceeded("resolvent search nested too deep")
    steps = []

    if a.is_bottom or b.is_bottom:
        # a bottom premise resolves the pair away entirely
        steps.append(ResolutionStep("A1'", (a, b), BOTTOM_CLAUSE))
        return steps

    for lit in sorted(a.literals, key=lambda l: (l.variable, not l.positive)):
        comp = lit.negate()
        if comp not in b.literals:
            continue
        core = ResolutionStep("A1", (_unit_lit(lit), _unit_lit(comp)), BOTTOM_CLAUSE)
        rem_a = Clause(a.literals - {lit}, a.boxes, a.diamonds)
        rem_b = Clause(b.literals - {comp}, b.boxes, b.diamonds)
        steps.append(_wrap_sigma(a, b, core, rem_a, rem_b))

    for da in sorted_clauses(a.boxes):
        for db in sorted_clauses(b.boxes):
            for inner in _sigma(da, db, depth - 1):
                conclusion = simplify(Clause(boxes=frozenset((inner.conclusion,))))
                core = ResolutionStep(
                    "sigma-boxbox", (_unit_box(da), _unit_box(db)), conclusion, (inner,)
                )
                rem_a = Clause(a.literals, a.boxes - {da}, a.diamonds)
                rem_b = Clause(b.literals, b.boxes - {db}, b.diamonds)
                steps.append(_wrap_sigma(a, b, core, rem_a, rem_b))

    for x, y in ((a, b), (b, a)):
        for d in sorted_clauses(x.boxes):
            if y.diamonds and not all(d in s for s in y.diamonds):
                # a box body holds at every successor, so each diamond's
                # witness satisfies it too: absorb the body into every
                # diamond of the partner at once.  Resolution alone cannot
                # reach these conclusions, and absorbing one diamond at a
                # time can stall on intermediates the residue removes.
                absorbed = frozenset(simplify_cnf(s | {d}) for s in y.diamonds)
                conclusion = simplify(Clause(diamonds=absorbed))
                core = ResolutionStep(
                    "sigma-absorb",
                    (_unit_box(d), Clause(diamonds=y.diamonds)),
                    conclusion,
                )
                rem_x = Clause(x.literals, x.boxes - {d}, x.diamonds)
                rem_y = Clause(y.literals, y.boxes, frozenset())
                steps.append(_wrap_sigma(a, b, core, rem_x, rem_y))
            for s in sorted(y.diamonds, key=lambda t: tuple(sorted(map(clause_key, t)))):
                rem_x = Clause(x.literals, x.boxes - {d}, x.diamonds)
                rem_y = Clause(y.literals, y.boxes, y.diamonds - {s})
                for e in sorted_clauses(s):
                    for inner in _sigma(d, e, depth - 1):
                        new_set = simplify_cnf(s | {inner.conclusion})
                        conclusion = simplify(Clause(diamonds=frozenset((new_set,))))
                        core = ResolutionStep(
                            "sigma-boxdiamond",
                            (_unit_box(d), _unit_dia(s)),
                            conclusion,
                            (inner,),
                        )
                        steps.append(_wrap_sigma(a, b, core, rem_x, rem_y))

    return steps


def _gamma(a: Clause, depth: int) -> list:
    if depth < 0:
        raise RecursionDepthExceeded("resolvent search nested too deep")
    steps = []

    for d in sorted_clauses(a.boxes):
        rem = Clause(a.literals, a.boxes - {d}, a.diamonds)
        # successor dichotomy: a world either has no successors or has one
        # satisfying the box body.  This seeds a diamond that absorption can
        # pack with other box bodies; without it, diamond-free premises
        # cover none of their box-or-diamond consequences.
        dichotomy = simplify(
            Clause(
                boxes=frozenset((BOTTOM_CLAUSE,)),
                diamonds=frozenset((frozenset((d,)),)),
            )
        )
        core = ResolutionStep("gamma-dichotomy", (_unit_box(d),), dichotomy)
        steps.append(_wrap_gamma(a, core, rem))
        for inner in _gamma(d, depth - 1):
            conclusion = simplify(Clause(boxes=frozenset((inner.conclusion,))))
            core = ResolutionStep("gamma-box", (_unit_box(d),), conclusion, (inner,))
            steps.append(_wrap_gamma(a, core, rem))

    for s in sorted(a.diamonds, key=lambda t: tuple(sorted(map(clause_key, t)))):
        rem = Clause(a.literals, a.boxes, a.diamonds - {s})
        members = sorted_clauses(s)
        for i, e1 in enumerate(members):
            for e2 in members[i + 1 :]:
                for inner in _sigma(e1, e2, depth - 1):
                    new_set = simplify_cnf(s | {inner.conclusion})
                    conclusion = simplify(Clause(diamonds=frozenset((new_set,))))
                    core = ResolutionStep(
                        "gamma-diamond1", (_unit_dia(s),), conclusion, (inner,)
                    )
                    steps.append(_wrap_gamma(a, core, rem))
        for e in members:
            for inner in _gamma(e, depth - 1):
                new_set = simplify_cnf(s | {inner.conclusion})
                conclusion = simplify(Clause(diamonds=frozenset((new_set,))))
                core = ResolutionStep(
                    "gamma-diamond2", (_unit_dia(s),), conclusion, (inner,)
                )
                steps.append(_wrap_gamma(a, core, rem))

    return steps


def _step_signature(step: ResolutionStep):
    return (
        step.rule,
        tuple(clause_key(p) for p in step.premises),
        tuple(_step_signature(s) for s in step.sub),
    )


def _dedup(steps) -> tuple:
    """One witness per distinct conclusion: fewest nodes, then stable signature."""
    best = {}
    for step in steps:
        key = clause_key(step.conclusion)
        rank = (step.node_count(), _step_signature(step))
        kept = best.get(key)
        if kept is None or rank < kept[0]:
            best[key] = (rank, step)
    return tuple(best[key][1] for key in sorted(best))


def sigma_resolvents(a: Clause, b: Clause, max_depth: int = DEFAULT_MAX_DEPTH) -> tuple:
    """All resolvents of a clause pair, one derivation per conclusion."""
    return _dedup(_sigma(a, b, max_depth))


def gamma_resolvents(a: Clause, max_depth: int = DEFAULT_MAX_DEPTH) -> tuple:
    """All single-premise resolvents of a clause, one derivation per conclusion."""
    return _dedup(_gamma(a, max_depth))


def closure_step_traced(
    clauses,
    clause_budget: int | None = None,
    max_depth: int = DEFAULT_MAX_DEPTH,
):
    """One closure layer with derivations: the set plus every one-step resolvent.

    Returns (clause set, steps for conclusions not already in the input).
    Distinct pairs are independent, so the merge is order-insensitive.
    """
    base = sorted_clauses(set(clauses))
    out = set(base)
    steps = []
    for i, a in enumerate(base):
        for b in base[i:]:
            steps.extend(_sigma(a, b, max_depth))
        steps.extend(_gamma(a, max_depth))
    fresh = _dedup(s for s in steps if s.conclusion not in out)
    out.update(s.conclusion for s in fresh)
    if clause_budget is not None and len(out) > clause_budget:
        raise ClauseBudgetExceeded(
            f"closure grew to {len(out)} clauses, over the budget of {clause_budget}"
        )
    return frozenset(out), fresh


def closure_step(
    clauses,
    clause_budget: int | None = None,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> frozenset:
    """One-step closure: input plus all pairwise and single-clause resolvents."""
    return closure_step_traced(clauses, clause_budget, max_depth)[0]
