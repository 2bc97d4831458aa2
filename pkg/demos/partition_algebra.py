"""A tour of the partition algebra on a five-element set.

Two partitions distinguish some pairs of elements and identify others; the
logical operations combine what they distinguish.  This script walks the
running example sigma = {{a,b,c},{d,e}}, pi = {{a,b},{c,d,e}} through every
primitive operation, the uniform graph-theoretic construction for all sixteen
binary operations, and the logical entropy of a partition.
"""

from partlog import (
    BoolOpTable, Universe, bottom, dit, graph_op, implies, indit, join,
    logical_entropy, make_partition, meet, nand, neg, pi_nand, refines, top,
)
from partlog.formula import OpCode

u = Universe.of("a", "b", "c", "d", "e")
sigma = make_partition(u, [["a", "b", "c"], ["d", "e"]])
pi = make_partition(u, [["a", "b"], ["c", "d", "e"]])

print("universe          :", ", ".join(u.elements))
print("sigma             :", sigma)
print("pi                :", pi)
print()

# A distinction ("dit") is an ordered pair split across two blocks.
print("|dit(sigma)|      :", dit(sigma).count, "ordered pairs")
print("|indit(sigma)|    :", indit(sigma).count, "(9 + 4 within-block pairs)")
print("sigma <= pi?      :", refines(sigma, pi))
print()

# The four primitive operations.  The join just pools distinctions; the meet
# needs the interior operator because common distinctions may be lost along
# chains of indistinctions.
print("join  sigma \\/ pi :", join(sigma, pi))
print("meet  sigma /\\ pi :", meet(sigma, pi), "(the blob: one connected component)")
print("impl  sigma => pi :", implies(sigma, pi), "(block {a,b} got discretized)")
print("nand  sigma | pi  :", nand(sigma, pi))
print()

# Negation collapses: any non-blob partition shares a dit with every other,
# so its 0-negation is the blob.
print("neg(sigma)        :", neg(sigma))
print("neg(0)            :", neg(bottom(u)))
print("pi-nand at 0 equals the nand:",
      pi_nand(sigma, pi, bottom(u)) == nand(sigma, pi))
print()

# People distinguished by first letter vs last letter of their names.
people = Universe.of("Tom", "John", "Jim")
alpha = make_partition(people, [["Tom"], ["John", "Jim"]])
omega = make_partition(people, [["Tom", "Jim"], ["John"]])
print("alpha /\\ omega    :", meet(alpha, omega))
print("alpha | omega     :", nand(alpha, omega),
      "(Tom and John are distinguished by both, so the nand merges them)")
print()

# Every binary truth table gives a partition operation: draw an arc wherever
# the table says F, then read off connected components.
print("all sixteen operations applied to (sigma, pi):")
for op in OpCode:
    table = BoolOpTable.from_value(op.value)
    print("  %-5s -> %s" % (op.symbol, graph_op(table, sigma, pi)))
print()

print("logical entropy h(sigma)      :", logical_entropy(sigma))
print("logical entropy h(top)        :", logical_entropy(top(u)))
print("logical entropy h(bottom)     :", logical_entropy(bottom(u)))
