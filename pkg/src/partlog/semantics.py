"""Evaluation in the partition algebra and its dual, and brute-force checking.

A formula evaluates to a partition once its atoms are bound to partitions on a
shared universe; a partition tautology always evaluates to the discrete
partition 1, and a weak partition tautology never evaluates to the indiscrete
partition 0.  Countermodel search enumerates assignments over universes of
increasing size, so the first countermodel reported is of minimal size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from . import core
from .core import (
    PairRelation, Partition, PartitionLogicError, Universe, bottom,
    enumerate_partitions, eq_diff, eq_join, eq_meet, eq_nor, indit,
    make_partition, top,
)
from .formula import (
    Atom, DAtom, DBottom, DDiff, DJoin, DMeet, DNor, DTop, DualFormula, Equiv,
    Formula, Impl, Join, Meet, Nand, One, Zero, atoms_of, desugar,
)


class UnboundAtom(PartitionLogicError):
    pass


class BudgetExceeded(PartitionLogicError):
    pass


class TooLarge(PartitionLogicError):
    pass


class NotPiRegular(PartitionLogicError):
    pass


# ---------------------------------------------------------------------------
# Assignments and evaluation
# ---------------------------------------------------------------------------

@dataclass
class Assignment:
    """Binding of atom names to partitions on one shared universe."""

    universe: Universe
    bindings: dict[str, Partition] = field(default_factory=dict)

    def __post_init__(self):
        for name, p in self.bindings.items():
            if p.universe != self.universe:
                raise core.UniverseMismatch(
                    "binding %r lives on a different universe" % name)

    def get(self, name: str) -> Partition:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundAtom(name) from None


def eval_formula(f: Formula, a: Assignment) -> Partition:
    """Evaluate f in the partition algebra on a's universe.

    The formula is desugared first; 0 and 1 always denote the indiscrete and
    discrete partitions.  Equal subformulas are evaluated once.
    """
    memo: dict[Formula, Partition] = {}

    def go(g: Formula) -> Partition:
        hit = memo.get(g)
        if hit is not None:
            return hit
        match g:
            case Atom(name):
                v = a.get(name)
            case Zero():
                v = bottom(a.universe)
            case One():
                v = top(a.universe)
            case Join(x, y):
                v = core.join(go(x), go(y))
            case Meet(x, y):
                v = core.meet(go(x), go(y))
            case Impl(x, y):
                v = core.implies(go(x), go(y))
            case Nand(x, y):
                v = core.nand(go(x), go(y))
            case _:
                raise TypeError("unreachable")
        memo[g] = v
        return v

    return go(desugar(f))


def eval_dual(d: DualFormula, a: Assignment) -> PairRelation:
    """Evaluate a dual formula in the algebra of equivalence relations.

    A d-superscripted atom denotes the indit set of its binding, so
    eval_dual(dualize(f), a) = indit(eval_formula(f, a)).
    """
    memo: dict[DualFormula, PairRelation] = {}

    def go(g: DualFormula) -> PairRelation:
        hit = memo.get(g)
        if hit is not None:
            return hit
        match g:
            case DAtom(name):
                v = indit(a.get(name))
            case DTop():
                v = PairRelation.full(a.universe)
            case DBottom():
                v = PairRelation.diagonal(a.universe)
            case DMeet(x, y):
                v = eq_meet(go(x), go(y))
            case DJoin(x, y):
                v = eq_join(go(x), go(y))
            case DDiff(x, y):
                v = eq_diff(go(x), go(y))
            case DNor(x, y):
                v = eq_nor(go(x), go(y))
            case _:
                raise TypeError("unreachable")
        memo[g] = v
        return v

    return go(d)


# ---------------------------------------------------------------------------
# Truth tables and the reduction principle
# ---------------------------------------------------------------------------

def _truth_value(f: Formula, env: dict[str, bool]) -> bool:
    match f:
        case Atom(name):
            return env[name]
        case Zero():
            return False
        case One():
            return True
        case Join(x, y):
            return _truth_value(x, env) or _truth_value(y, env)
        case Meet(x, y):
            return _truth_value(x, env) and _truth_value(y, env)
        case Impl(x, y):
            return (not _truth_value(x, env)) or _truth_value(y, env)
        case Nand(x, y):
            return not (_truth_value(x, env) and _truth_value(y, env))
    raise TypeError("unreachable")


def is_truth_table_tautology(f: Formula) -> bool:
    """True iff f evaluates to 1 under every 0/1 assignment.

    Checked both by truth tables and, via the reduction principle
    Pi(2) = P(1), by evaluating over the two partitions on a two-element
    universe; the routes must agree.
    """
    g = desugar(f)
    names = sorted(atoms_of(g))
    u2 = canonical_universe(2)
    zero_one = (bottom(u2), top(u2))
    by_tables = True
    by_pi2 = True
    for bits in product((False, True), repeat=len(names)):
        env = dict(zip(names, bits))
        if not _truth_value(g, env):
            by_tables = False
        a = Assignment(u2, {n: zero_one[b] for n, b in env.items()})
        if eval_formula(g, a) != top(u2):
            by_pi2 = False
    if by_tables != by_pi2:
        raise core.InternalInvariantError(
            "truth-table and Pi(2) routes disagree on %r" % (f,))
    return by_tables


# ---------------------------------------------------------------------------
# Countermodel search
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def canonical_universe(n: int) -> Universe:
    return Universe(tuple("u%d" % i for i in range(n)))


@lru_cache(maxsize=None)
def partitions_on(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(canonical_universe(n)))


def assignments_over(names: Sequence[str], n: int) -> Iterator[Assignment]:
    """All assignments of partitions on the canonical n-universe, in
    deterministic order (first name varies slowest, restricted-growth order)."""
    u = canonical_universe(n)
    for combo in product(partitions_on(n), repeat=len(names)):
        yield Assignment(u, dict(zip(names, combo)))


@dataclass
class CheckResult:
    """Outcome of a bounded tautology check."""

    verdict: str                      # "tautology_up_to" | "weak_tautology_up_to" | "countermodel"
    max_n: int
    assignment: Assignment | None = None
    evaluated: Partition | None = None
    witness_pair: tuple[str, str] | None = None

    @property
    def is_countermodel(self) -> bool:
        return self.verdict == "countermodel"


def _search(f: Formula, max_n: int, budget: int, weak: bool) -> CheckResult:
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    g = desugar(f)
    names = sorted(atoms_of(g))
    total = sum(bell(n) ** len(names) for n in range(2, max_n + 1))
    if total > budget:
        raise BudgetExceeded(
            "search needs %d evaluations but the budget is %d" % (total, budget))
    for n in range(2, max_n + 1):
        t = top(canonical_universe(n))
        b = bottom(canonical_universe(n))
        for a in assignments_over(names, n):
            v = eval_formula(g, a)
            if weak:
                if v == b:
                    return CheckResult("countermodel", max_n, a, v, None)
            elif v != t:
                pair = next(p for p in v.universe.pairs() if v.same_block(*p))
                return CheckResult("countermodel", max_n, a, v, pair)
    verdict = "weak_tautology_up_to" if weak else "tautology_up_to"
    return CheckResult(verdict, max_n)


def check_partition_tautology(f: Formula, max_n: int,
                              budget: int = 10_000_000) -> CheckResult:
    """Search all assignments on universes of size 2..max_n for an evaluation
    different from 1; the first (hence minimal-universe) countermodel wins."""
    return _search(f, max_n, budget, weak=False)


def check_weak(f: Formula, max_n: int, budget: int = 10_000_000) -> CheckResult:
    """Like check_partition_tautology but hunting evaluations equal to 0."""
    return _search(f, max_n, budget, weak=True)


# ---------------------------------------------------------------------------
# Bell numbers and the omega_n family
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell numbers by the triangle recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


_OMEGA_MAX_N = 6   # Bell(6)=203 atoms, ~20k disjuncts; beyond that refuse


def omega_atom(i: int) -> Atom:
    return Atom("p%d" % i)


def omega(n: int) -> Formula:
    """The join of all equivalences over Bell(n)+1 fresh atoms.

    Evaluates to 1 on every assignment over universes of size <= n (pigeonhole)
    yet has a countermodel on Bell(n)+1 elements, so no fixed universe size
    decides partition tautologies.
    """
    if n < 2:
        raise ValueError("omega is defined for n >= 2")
    if n > _OMEGA_MAX_N:
        raise TooLarge("omega(%d) would need %d atoms" % (n, bell(n) + 1))
    b = bell(n)
    out: Formula | None = None
    for i in range(b + 1):
        for j in range(i + 1, b + 1):
            term = Equiv(omega_atom(i), omega_atom(j))
            out = term if out is None else Join(out, term)
    assert out is not None
    return out


def omega_countermodel(n: int) -> Assignment:
    """The explicit countermodel: on U = {0..Bell(n)}, atom p_i binds the
    binary partition isolating element i."""
    b = bell(n)
    u = canonical_universe(b + 1)
    bindings = {}
    for i in range(b + 1):
        el = u.elements[i]
        rest = [e for e in u.elements if e != el]
        bindings["p%d" % i] = make_partition(u, [[el], rest])
    return Assignment(u, bindings)


# ---------------------------------------------------------------------------
# The Boolean core B_pi and the block algebra B(pi)
# ---------------------------------------------------------------------------

def non_singleton_blocks(p: Partition) -> tuple[tuple[str, ...], ...]:
    return tuple(b for b in p.blocks if len(b) > 1)


def is_pi_regular(r: Partition, p: Partition) -> bool:
    """True iff r is p with some subset of p's blocks discretized,
    i.e. r = s => p for some s."""
    core._check_same_universe(r, p)
    for block in p.blocks:
        whole = (len({r.block_of(el) for el in block}) == 1
                 and sum(1 for el in p.universe.elements
                         if r.block_of(el) == r.block_of(block[0])) == len(block))
        discrete = all(
            sum(1 for el in p.universe.elements
                if r.block_of(el) == r.block_of(x)) == 1
            for x in block)
        if not (whole or discrete):
            return False
    return True


def chi(r: Partition, p: Partition) -> dict[tuple[str, ...], int]:
    """Characteristic map of a p-regular partition over p's non-singleton
    blocks: 1 where the block is discretized in r, 0 where it stays whole."""
    if not is_pi_regular(r, p):
        raise NotPiRegular("%r is not %r-regular" % (r, p))
    out = {}
    for block in non_singleton_blocks(p):
        discretized = r.block_of(block[0]) != r.block_of(block[1])
        out[block] = 1 if discretized else 0
    return out


def discretize_blocks(p: Partition, chosen: Sequence[tuple[str, ...]]) -> Partition:
    """p with the chosen blocks replaced by their singletons."""
    chosen_set = {tuple(b) for b in chosen}
    blocks: list[list[str]] = []
    for block in p.blocks:
        if block in chosen_set:
            blocks.extend([el] for el in block)
        else:
            blocks.append(list(block))
    return make_partition(p.universe, blocks)


def boolean_core(p: Partition, cap: int = 20) -> list[Partition]:
    """All 2^|p_ns| p-regular partitions, in binary-counting order over the
    non-singleton blocks (bit i set = discretize the i-th one)."""
    ns = non_singleton_blocks(p)
    if len(ns) > cap:
        raise TooLarge("2^%d core elements exceeds the cap" % len(ns))
    out = []
    for mask in range(2 ** len(ns)):
        chosen = [b for i, b in enumerate(ns) if mask >> i & 1]
        out.append(discretize_blocks(p, chosen))
    return out


def block_algebra_size(p: Partition) -> int:
    """|B(p)|: the complete subalgebra of P(U) generated by p's blocks."""
    return 2 ** p.n_blocks


def in_block_algebra(p: Partition, subset: set[str]) -> bool:
    """Membership predicate for B(p): is the subset a union of blocks of p?"""
    return all(set(b) <= subset or not (set(b) & subset) for b in p.blocks)


# ---------------------------------------------------------------------------
# JSON wire formats
# ---------------------------------------------------------------------------

def assignment_to_json(a: Assignment) -> dict:
    return {"universe": list(a.universe.elements),
            "bindings": {name: [list(b) for b in p.blocks]
                         for name, p in sorted(a.bindings.items())}}


def assignment_from_json(obj: dict) -> Assignment:
    u = Universe(tuple(obj["universe"]))
    return Assignment(u, {name: make_partition(u, blocks)
                          for name, blocks in obj["bindings"].items()})


def check_result_to_json(r: CheckResult) -> dict:
    out: dict = {"verdict": r.verdict, "max_n": r.max_n}
    if r.assignment is not None:
        out["universe"] = list(r.assignment.universe.elements)
        out["bindings"] = assignment_to_json(r.assignment)["bindings"]
    if r.evaluated is not None:
        out["evaluated"] = [list(b) for b in r.evaluated.blocks]
    if r.witness_pair is not None:
        out["pair"] = list(r.witness_pair)
    return out
