"""Dualization, the Boolean core, and transforms of classical tautologies.

Complementing a partition relation gives an equivalence relation, so every
formula has a dual over the algebra of equivalence relations, and evaluating
the dual lands exactly on the indit set of the original.  Inside the interval
above a fixed partition pi sits a Boolean core where classical reasoning is
exact, which is what the pi-negation and Goedel transforms exploit.
"""

from partlog import (
    Atom, Universe, ZERO, boolean_core, check_partition_tautology, chi,
    desugar, double_pi_neg_transform, dual_to_text, dualize, eval_dual,
    eval_formula, godel_transform, implies, indit, make_partition, parse,
    single_pi_neg_transform, to_text,
)
from partlog.formula import Impl, OpCode, cnf_of, dnf_dual_of
from partlog.semantics import Assignment

print("=== dualization ===")
mp = desugar(parse("(s /\\ (s => t)) => t"))
print("modus ponens   :", to_text(mp))
print("its dual       :", dual_to_text(dualize(mp)))
print()

u = Universe.of("a", "b", "c", "d", "e")
sigma = make_partition(u, [["a", "b", "c"], ["d", "e"]])
tau = make_partition(u, [["a", "b"], ["c", "d", "e"]])
a = Assignment(u, {"s": sigma, "t": tau})
print("eval_dual(dual(mp)) == indit(eval(mp)):",
      eval_dual(dualize(mp), a) == indit(eval_formula(mp, a)))
print()

print("=== the CNF and DNF operation tables ===")
for op in (OpCode.AND, OpCode.IFF, OpCode.XOR, OpCode.NOT_LEFT):
    print("  %-4s CNF: %-34s dual DNF: %s"
          % (op.symbol, to_text(cnf_of(op)), dual_to_text(dnf_dual_of(op))))
print()

print("=== the Boolean core above pi ===")
pi = tau
for r in boolean_core(pi):
    print("  chi =", dict(chi(r, pi)), "->", r)
print("implies(sigma, pi) lands in the core with chi =",
      dict(chi(implies(sigma, pi), pi)))
print()

print("=== transforms of classical tautologies ===")
lem = desugar(parse("s \\/ ~s"))
p = Atom("p")
for name, g in [
    ("excluded middle", lem),
    ("single pi-negation transform", single_pi_neg_transform(lem, p)),
    ("double pi-negation transform", double_pi_neg_transform(lem, p)),
    ("Goedel pi-transform, boxed", Impl(Impl(godel_transform(lem, p), p), p)),
    ("Goedel 0-transform (unchanged)", godel_transform(lem, ZERO)),
]:
    r = check_partition_tautology(g, 3)
    verdict = "partition tautology up to |U|=3" if not r.is_countermodel \
        else "refuted on %d elements" % r.assignment.universe.size
    print("  %-32s %s" % (name, to_text(g)))
    print("  %-32s -> %s" % ("", verdict))
