"""Monotone interval propagation over a fact graph of knots.

Knots carry integer intervals for the concordance invariant tau and the
slice genus g4, an optional Seifert-genus interval g3, and an optional
Thurston-Bennequin lower bound.  Relations (mirror, connected sum,
crossing change, cobordism, unknotting, Whitehead double) and stored
presentations generate monotone narrowing rules; propagation runs the
rules to their least fixpoint and records every narrowing in a replayable
certificate.

Rule catalog:
  R1  mirror:        tau(-K) = -tau(K), g4(-K) = g4(K)
  R2  genus chain:   -g4 <= tau <= g4, 0 <= g4 <= g3
  R3  crossing:      0 <= tau(K+) - tau(K-) <= 1
  R4  additivity:    tau(a # b) = tau(a) + tau(b)
  R5  cobordism:     |tau(a) - tau(b)| <= g  when g4(a # -b) <= g
  R6  unknotting:    -m <= tau <= p, g4 <= p + m  for p pos-to-neg and
                     m neg-to-pos changes reaching the unknot
  R7  seeds:         exact values / bounds injected from presentations
                     (positive braids, torus and pretzel parameters, grid
                     tb certificates) and from doubles of companions with
                     certified nonnegative tb lower bound

All rules are meets on a product lattice, so the fixpoint is independent
of application order.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field, replace

from . import braid as braid_mod
from . import families, grid as grid_mod
from .errors import (
    BudgetExceededError,
    BrokenStepError,
    DuplicateIdError,
    EmptyIntervalError,
    InconsistentError,
    UnknownIdError,
)
from .interval import NEG_INF, POS_INF, Interval

DEFAULT_STEP_BUDGET = 10**6
FACT_KINDS = ("g3", "g4_upper", "tb_lower", "tau_lower", "tau_upper")


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Tagged presentation string: braid / grid / torus / pretzel grammar."""

    kind: str
    value: str

    def __post_init__(self):
        if self.kind not in ("braid", "grid", "torus", "pretzel"):
            raise ValueError(f"unknown presentation kind {self.kind!r}")

    def resolve(self):
        """Parse and validate; returns the underlying object."""
        if self.kind == "braid":
            b = braid_mod.parse_braid(self.value)
            braid_mod.closure_components(b)  # validates letters only
            return b
        if self.kind == "grid":
            return grid_mod.parse_grid(self.value)
        if self.kind == "torus":
            p, q = (int(t) for t in self.value.split())
            return families.TorusParams(p, q)
        twists = tuple(int(t) for t in self.value.split())
        return families.PretzelParams(twists)

    def check_knot(self) -> None:
        obj = self.resolve()
        if self.kind == "braid" and braid_mod.closure_components(obj) != 1:
            raise braid_mod.NotAKnotError(
                f"braid presentation {self.value!r} closes to a link"
            )
        if self.kind == "grid" and grid_mod.components(obj) != 1:
            raise grid_mod.NotAKnotError(
                f"grid presentation has {grid_mod.components(obj)} components"
            )


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class Mirror:
    a: str
    b: str
    kind: str = field(default="mirror", init=False)


@dataclass(frozen=True)
class Sum:
    a: str
    b: str
    c: str  # c = a # b
    kind: str = field(default="sum", init=False)


@dataclass(frozen=True)
class CrossingChange:
    plus: str
    minus: str  # minus obtained from plus by one positive-to-negative change
    kind: str = field(default="crossing_change", init=False)


@dataclass(frozen=True)
class Cobordism:
    a: str
    b: str
    genus: int
    kind: str = field(default="cobordism", init=False)


@dataclass(frozen=True)
class Unknotting:
    knot: str
    positive: int  # positive-to-negative changes
    negative: int  # negative-to-positive changes
    kind: str = field(default="unknotting", init=False)


@dataclass(frozen=True)
class Double:
    companion: str
    result: str
    iterations: int = 1
    kind: str = field(default="double", init=False)


Relation = Mirror | Sum | CrossingChange | Cobordism | Unknotting | Double


def _relation_operands(rel: Relation) -> tuple[str, ...]:
    if isinstance(rel, Mirror):
        return (rel.a, rel.b)
    if isinstance(rel, Sum):
        return (rel.a, rel.b, rel.c)
    if isinstance(rel, CrossingChange):
        return (rel.plus, rel.minus)
    if isinstance(rel, Cobordism):
        return (rel.a, rel.b)
    if isinstance(rel, Unknotting):
        return (rel.knot,)
    return (rel.companion, rel.result)


# ---------------------------------------------------------------------------
# fact base


@dataclass(frozen=True)
class Fact:
    knot: str
    kind: str
    value: int
    source: str = ""

    def __post_init__(self):
        if self.kind not in FACT_KINDS:
            raise ValueError(f"unknown fact kind {self.kind!r}")


@dataclass(frozen=True)
class KnotRecord:
    id: str
    tau: Interval
    g4: Interval
    g3: int | None = None
    tb_lower: int | None = None
    presentations: tuple[Presentation, ...] = ()

    @staticmethod
    def fresh(id: str, presentations: tuple[Presentation, ...] = ()) -> "KnotRecord":
        return KnotRecord(id, Interval.top(), Interval(0, POS_INF),
                          presentations=presentations)


@dataclass(frozen=True)
class FactBase:
    """Immutable snapshot: knots with presentations, input facts, relations.

    Records hold the current intervals; on a freshly built base they are
    the axiom intervals implied by the input facts alone.  `propagate`
    produces a new base at the rule fixpoint.
    """

    records: dict[str, KnotRecord] = field(default_factory=dict)
    facts: tuple[Fact, ...] = ()
    relations: tuple[Relation, ...] = ()

    def knot(self, id: str) -> KnotRecord:
        if id not in self.records:
            raise UnknownIdError(f"unknown knot id {id!r}")
        return self.records[id]

    def add_knot(self, id: str, presentations=()) -> "FactBase":
        if id in self.records:
            raise DuplicateIdError(f"knot id {id!r} already present")
        pres = tuple(
            p if isinstance(p, Presentation) else Presentation(**p)
            for p in presentations
        )
        for p in pres:
            p.check_knot()
        records = dict(self.records)
        records[id] = KnotRecord.fresh(id, pres)
        return replace(self, records=records)

    def add_fact(self, knot: str, kind: str, value: int, source: str = "") -> "FactBase":
        rec = self.knot(knot)
        fact = Fact(knot, kind, value, source)
        try:
            rec = _apply_fact(rec, fact)
        except EmptyIntervalError as e:
            raise InconsistentError(f"fact {fact} contradicts {knot}: {e}") from e
        records = dict(self.records)
        records[knot] = rec
        return replace(self, records=records, facts=self.facts + (fact,))

    def add_relation(self, rel: Relation) -> "FactBase":
        for id in _relation_operands(rel):
            self.knot(id)
        return replace(self, relations=self.relations + (rel,))


def _apply_fact(rec: KnotRecord, fact: Fact) -> KnotRecord:
    if fact.kind == "g3":
        if rec.g3 is not None and rec.g3 != fact.value:
            raise EmptyIntervalError(f"g3 already pinned to {rec.g3}")
        return replace(rec, g3=fact.value)
    if fact.kind == "g4_upper":
        return replace(rec, g4=rec.g4.meet(Interval.at_most(fact.value)))
    if fact.kind == "tb_lower":
        tb = fact.value if rec.tb_lower is None else max(rec.tb_lower, fact.value)
        return replace(rec, tb_lower=tb)
    if fact.kind == "tau_lower":
        return replace(rec, tau=rec.tau.meet(Interval.at_least(fact.value)))
    return replace(rec, tau=rec.tau.meet(Interval.at_most(fact.value)))


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CertStep:
    """One narrowing: `rule` applied to `premises` concluded `conclusion`
    for (target, quantity); `result` is the meet with the prior value."""

    index: int
    rule: str
    target: str
    quantity: str  # tau | g4 | g3_upper | tb_lower
    premises: tuple = ()
    conclusion: object = None  # Interval, or int for tb_lower
    result: object = None

    def describe(self) -> str:
        return (f"[{self.index}] {self.rule}: {self.target}.{self.quantity} "
                f"<- {self.conclusion} => {self.result}")


@dataclass(frozen=True)
class Certificate:
    steps: tuple[CertStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def for_knot(self, id: str) -> "Certificate":
        """Minimal sub-derivation supporting the knot's current intervals:
        steps targeting the knot plus the transitive closure of the steps
        that narrowed their premises."""
        wanted: set[int] = set()
        frontier = [s for s in self.steps if s.target == id]
        by_key: dict[tuple[str, str], list[CertStep]] = {}
        for s in self.steps:
            by_key.setdefault((s.target, s.quantity), []).append(s)
        while frontier:
            step = frontier.pop()
            if step.index in wanted:
                continue
            wanted.add(step.index)
            for kind, *info in step.premises:
                if kind != "fact":
                    continue
                knot, qty = info[0], info[1]
                for prior in by_key.get((knot, qty), ()):
                    if prior.index < step.index and prior.index not in wanted:
                        frontier.append(prior)
        return Certificate(tuple(s for s in self.steps if s.index in wanted))


# ---------------------------------------------------------------------------
# propagation engine

_QTYS = ("tau", "g4")


class _State:
    """Mutable working copy of the lattice during propagation/replay."""

    def __init__(self, base: FactBase):
        self.tau = {id: r.tau for id, r in base.records.items()}
        self.g4 = {id: r.g4 for id, r in base.records.items()}
        self.g3 = {id: r.g3 for id, r in base.records.items()}
        # g3 upper bounds derived from Seifert surfaces; kept apart from the
        # exact input value so the record's g3 slot stays an input fact.
        self.g3_upper = {id: POS_INF for id in base.records}
        self.tb_lower = {id: r.tb_lower for id, r in base.records.items()}

    def get(self, knot: str, qty: str):
        return getattr(self, qty)[knot]

    def fact_premise(self, knot: str, qty: str) -> tuple:
        return ("fact", knot, qty, str(self.get(knot, qty)))


def _g3_hi(state: _State, id: str):
    hi = state.g3_upper[id]
    if state.g3[id] is not None:
        hi = min(hi, state.g3[id])
    return hi


def _instances(base: FactBase) -> list[tuple[str, object]]:
    out: list[tuple[str, object]] = []
    for id, rec in base.records.items():
        out.append(("R2", id))
        for p in rec.presentations:
            out.append((f"R7-{p.kind}", (id, p)))
    for rel in base.relations:
        rule = {
            Mirror: "R1",
            CrossingChange: "R3",
            Sum: "R4",
            Cobordism: "R5",
            Unknotting: "R6",
            Double: "R7-double",
        }[type(rel)]
        out.append((rule, rel))
    return out


def _implications(rule: str, payload, state: _State):
    """Narrowing constraints implied by one rule instance in `state`.

    Returns (target, quantity, constraint, premises) tuples; constraints
    are Intervals except for tb_lower (int lower bound).
    """
    out = []

    def emit(target, qty, constraint, *premises):
        out.append((target, qty, constraint, tuple(premises)))

    if rule == "R2":
        id = payload
        tau, g4 = state.tau[id], state.g4[id]
        if g4.hi != POS_INF:
            emit(id, "tau", Interval(-g4.hi, g4.hi), state.fact_premise(id, "g4"))
        lo = max(0, tau.lo, -tau.hi)
        hi = _g3_hi(state, id)
        emit(id, "g4", _EMPTY if lo > hi else Interval(lo, hi),
             state.fact_premise(id, "tau"),
             ("fact", id, "g3", str(state.g3[id])),
             ("fact", id, "g3_upper", str(state.g3_upper[id])))

    elif rule == "R1":
        rel = payload
        for x, y in ((rel.a, rel.b), (rel.b, rel.a)):
            emit(y, "tau", -state.tau[x], ("relation", rel),
                 state.fact_premise(x, "tau"))
            emit(y, "g4", state.g4[x], ("relation", rel),
                 state.fact_premise(x, "g4"))

    elif rule == "R3":
        rel = payload
        tp, tm = state.tau[rel.plus], state.tau[rel.minus]
        emit(rel.plus, "tau", Interval(tm.lo, _inf_add(tm.hi, 1)),
             ("relation", rel), state.fact_premise(rel.minus, "tau"))
        emit(rel.minus, "tau", Interval(_inf_add(tp.lo, -1), tp.hi),
             ("relation", rel), state.fact_premise(rel.plus, "tau"))

    elif rule == "R4":
        rel = payload
        ta, tb_, tc = state.tau[rel.a], state.tau[rel.b], state.tau[rel.c]
        emit(rel.c, "tau", ta + tb_, ("relation", rel),
             state.fact_premise(rel.a, "tau"), state.fact_premise(rel.b, "tau"))
        emit(rel.a, "tau", tc - tb_, ("relation", rel),
             state.fact_premise(rel.c, "tau"), state.fact_premise(rel.b, "tau"))
        emit(rel.b, "tau", tc - ta, ("relation", rel),
             state.fact_premise(rel.c, "tau"), state.fact_premise(rel.a, "tau"))

    elif rule == "R5":
        rel = payload
        for x, y in ((rel.a, rel.b), (rel.b, rel.a)):
            emit(y, "tau", state.tau[x].widen_by(rel.genus),
                 ("relation", rel), state.fact_premise(x, "tau"))

    elif rule == "R6":
        rel = payload
        emit(rel.knot, "tau", Interval(-rel.negative, rel.positive),
             ("relation", rel))
        emit(rel.knot, "g4", Interval(0, rel.positive + rel.negative),
             ("relation", rel))

    elif rule == "R7-braid":
        id, pres = payload
        b = pres.resolve()
        prem = ("presentation", id, pres)
        genus = braid_mod.bennequin_genus(b)
        emit(id, "tau", Interval.at_least(braid_mod.slice_bennequin_lower(b)), prem)
        emit(id, "g3_upper", Interval.at_most(genus), prem)
        if b.is_positive:
            v = braid_mod.tau_positive_braid(b)
            emit(id, "tau", Interval.exact(v), prem)
            emit(id, "g4", Interval.exact(v), prem)
            emit(id, "g3_upper", Interval.at_most(v), prem)

    elif rule == "R7-torus":
        id, pres = payload
        v = families.tau_torus(pres.resolve())
        prem = ("presentation", id, pres)
        emit(id, "tau", Interval.exact(v), prem)
        emit(id, "g4", Interval.exact(v), prem)
        emit(id, "g3_upper", Interval.at_most(v), prem)

    elif rule == "R7-pretzel":
        id, pres = payload
        v = families.pretzel_tau(pres.resolve())
        if v is not None:
            emit(id, "tau", Interval.exact(v), ("presentation", id, pres))

    elif rule == "R7-grid":
        id, pres = payload
        g = pres.resolve()
        emit(id, "tb_lower", grid_mod.tb(g), ("presentation", id, pres))

    elif rule == "R7-double":
        rel = payload
        tb = state.tb_lower[rel.companion]
        if tb is not None and tb >= 0:
            prem = (("relation", rel),
                    ("fact", rel.companion, "tb_lower", str(tb)))
            emit(rel.result, "tau", Interval.exact(1), *prem)
            emit(rel.result, "g4", Interval.exact(1), *prem)

    else:
        raise ValueError(f"unknown rule {rule!r}")
    return out


# Marker for a rule whose premise bounds already conflict; narrowing it is
# the inconsistency signal.
_EMPTY = "EMPTY"


def _inf_add(a, b):
    if a in (NEG_INF, POS_INF):
        return a
    return a + b


def _narrow(state: _State, target: str, qty: str, constraint):
    """Meet `constraint` into the state; returns the new value or None if
    nothing changed."""
    if constraint == _EMPTY:
        raise EmptyIntervalError(f"conflicting bounds on {target}.{qty}")
    if qty == "tb_lower":
        cur = state.tb_lower[target]
        if cur is None or constraint > cur:
            state.tb_lower[target] = constraint
            return constraint
        return None
    if qty == "g3_upper":
        cur = state.g3_upper[target]
        new = min(cur, constraint.hi)
        if state.g3[target] is not None and new < state.g3[target]:
            raise EmptyIntervalError(
                f"g3 upper bound {new} below exact g3 = {state.g3[target]}")
        if new < cur:
            state.g3_upper[target] = new
            return Interval.at_most(new)
        return None
    cur = state.get(target, qty)
    new = cur.meet(constraint)
    if new != cur:
        getattr(state, qty)[target] = new
        return new
    return None


def step_budget_default() -> int:
    env = os.environ.get("TAU_STEP_BUDGET")
    return int(env) if env else DEFAULT_STEP_BUDGET


def propagate(
    base: FactBase,
    *,
    step_budget: int | None = None,
    shuffle_seed: int | None = None,
) -> tuple[FactBase, Certificate]:
    """Run all rules to their least fixpoint.

    `shuffle_seed` randomizes the rule application order; the fixpoint is
    unaffected (the rules are monotone meets) but certificates differ.
    Raises InconsistentError (empty interval; carries the certificate
    prefix) or BudgetExceededError.
    """
    budget = step_budget if step_budget is not None else step_budget_default()
    state = _State(base)
    instances = _instances(base)
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    steps: list[CertStep] = []
    spent = 0

    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(instances)
        for rule, payload in instances:
            spent += 1
            if spent > budget:
                raise BudgetExceededError(
                    f"propagation exceeded step budget {budget}")
            # Re-derive after every applied narrowing so each recorded
            # conclusion is computed from the exact state replay will see.
            applied = True
            while applied:
                applied = False
                for target, qty, constraint, premises in _implications(
                        rule, payload, state):
                    try:
                        result = _narrow(state, target, qty, constraint)
                    except EmptyIntervalError as e:
                        raise InconsistentError(
                            f"{rule} on {target}.{qty}: {e}",
                            certificate=Certificate(tuple(steps))) from e
                    if result is not None:
                        changed = True
                        applied = True
                        steps.append(CertStep(
                            index=len(steps), rule=rule, target=target,
                            quantity=qty, premises=premises,
                            conclusion=constraint, result=result))
                        break

    records = {
        id: replace(
            rec,
            tau=state.tau[id],
            g4=state.g4[id],
            tb_lower=state.tb_lower[id],
        )
        for id, rec in base.records.items()
    }
    return replace(base, records=records), Certificate(tuple(steps))


def query(base: FactBase, cert: Certificate, id: str) -> tuple[KnotRecord, Certificate]:
    """Record of `id` in a propagated base, plus the minimal certificate
    slice supporting its intervals."""
    return base.knot(id), cert.for_knot(id)


def replay(cert: Certificate, base: FactBase) -> bool:
    """Re-derive every step from the base's axioms, checking each
    conclusion follows from its premises by the named rule.  Raises
    BrokenStepError at the first failure."""
    state = _State(base)
    for step in cert.steps:
        payload = _replay_payload(step)
        implied = None
        for target, qty, constraint, _ in _implications(step.rule, payload, state):
            if target == step.target and qty == step.quantity \
                    and constraint == step.conclusion:
                implied = constraint
                break
        if implied is None:
            raise BrokenStepError(
                f"step {step.index}: {step.rule} does not yield "
                f"{step.conclusion} for {step.target}.{step.quantity}",
                step_index=step.index)
        try:
            result = _narrow(state, step.target, step.quantity, implied)
        except EmptyIntervalError as e:
            raise BrokenStepError(
                f"step {step.index}: meet is empty: {e}",
                step_index=step.index) from e
        if result != step.result:
            raise BrokenStepError(
                f"step {step.index}: recorded result {step.result} but "
                f"replay produced {result}", step_index=step.index)
    return True


def _replay_payload(step: CertStep):
    """Reconstruct the rule payload from the step's premises."""
    if step.rule == "R2":
        return step.target
    for kind, *info in step.premises:
        if kind == "relation":
            return info[0]
        if kind == "presentation":
            return (info[0], info[1])
    raise BrokenStepError(
        f"step {step.index}: no payload premise for rule {step.rule}",
        step_index=step.index)
