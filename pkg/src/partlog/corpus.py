"""Seeded random formula corpora for statistical identity checks and tests."""

from __future__ import annotations

import random
from typing import Sequence

from .formula import (
    Atom, Equiv, Formula, Impl, Inequiv, Join, Meet, Nand, Not, ONE, ZERO,
    desugar,
)

DEFAULT_ATOMS = ("s", "t", "p")


def random_formula(rng: random.Random, max_depth: int = 5,
                   atom_names: Sequence[str] = DEFAULT_ATOMS,
                   allow_derived: bool = True,
                   allow_nand: bool = True) -> Formula:
    """One random AST; shapes are drawn uniformly from the allowed node kinds."""
    leaves = [lambda: Atom(rng.choice(atom_names)),
              lambda: Atom(rng.choice(atom_names)),  # atoms twice as likely
              lambda: ZERO, lambda: ONE]
    if max_depth == 0:
        return rng.choice(leaves)()
    binary = [Join, Meet, Impl]
    if allow_nand:
        binary.append(Nand)
    if allow_derived:
        binary += [Equiv, Inequiv]
    kinds = ["leaf", "not", "binary", "binary", "binary"]
    kind = rng.choice(kinds)
    if kind == "leaf":
        return rng.choice(leaves)()
    if kind == "not":
        return Not(random_formula(rng, max_depth - 1, atom_names,
                                  allow_derived, allow_nand))
    op = rng.choice(binary)
    return op(random_formula(rng, max_depth - 1, atom_names, allow_derived, allow_nand),
              random_formula(rng, max_depth - 1, atom_names, allow_derived, allow_nand))


def formula_corpus(seed: int, count: int, max_depth: int = 5,
                   atom_names: Sequence[str] = DEFAULT_ATOMS,
                   allow_derived: bool = True,
                   allow_nand: bool = True) -> list[Formula]:
    rng = random.Random(seed)
    return [random_formula(rng, max_depth, atom_names, allow_derived, allow_nand)
            for _ in range(count)]


def tautology_corpus(seed: int, count: int, max_depth: int = 4,
                     atom_names: Sequence[str] = ("s", "t")) -> list[Formula]:
    """Seeded truth-table tautologies, desugared and nand-free.

    Rejection-samples random nand-free formulas; every tenth draw is fused
    into x \\/ ~x form to keep the supply dense at small depths.
    """
    from .semantics import is_truth_table_tautology

    rng = random.Random(seed)
    out: list[Formula] = []
    draws = 0
    while len(out) < count:
        f = random_formula(rng, max_depth, atom_names,
                           allow_derived=False, allow_nand=False)
        draws += 1
        if draws % 10 == 0:
            f = Join(f, Not(f))
        f = desugar(f)
        if is_truth_table_tautology(f):
            out.append(f)
    return out


def non_tautology_corpus(seed: int, count: int, max_depth: int = 4,
                         atom_names: Sequence[str] = ("s", "t")) -> list[Formula]:
    """Seeded nand-free formulas that are not truth-table tautologies."""
    from .semantics import is_truth_table_tautology

    rng = random.Random(seed)
    out: list[Formula] = []
    while len(out) < count:
        f = desugar(random_formula(rng, max_depth, atom_names,
                                   allow_derived=False, allow_nand=False))
        if not is_truth_table_tautology(f):
            out.append(f)
    return out
