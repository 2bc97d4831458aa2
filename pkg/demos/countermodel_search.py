"""Which classical tautologies survive as partition tautologies?

Brute-force search over all assignments of partitions on universes of
increasing size.  Classical logic is the two-element special case, so any
formula that fails a truth table already fails here; the interesting
specimens are classical tautologies that a larger universe refutes.
"""

from partlog import (
    check_partition_tautology, check_weak, eval_formula, is_truth_table_tautology,
    omega, omega_countermodel, parse, to_text,
)
from partlog.semantics import assignment_to_json

CANDIDATES = [
    ("modus ponens", "(s /\\ (s => p)) => p"),
    ("K axiom", "p => (s => p)"),
    ("weak excluded middle", "~s \\/ ~~s"),
    ("excluded middle", "s \\/ ~s"),
    ("Peirce's law", "((s => p) => s) => s"),
    ("accumulation", "s => (p => (s /\\ p))"),
    ("distributivity", "((p \\/ s) /\\ (p \\/ t)) => (p \\/ (s /\\ t))"),
]

for name, text in CANDIDATES:
    f = parse(text)
    classical = is_truth_table_tautology(f)
    strict = check_partition_tautology(f, 3)
    weak = check_weak(f, 3)
    print("%-22s %s" % (name, text))
    print("   truth-table tautology: %s" % classical)
    if strict.is_countermodel:
        a = strict.assignment
        print("   partition countermodel on %d elements: %s"
              % (a.universe.size, assignment_to_json(a)["bindings"]))
    else:
        print("   no countermodel up to |U| = 3")
    print("   weak (never evaluates to 0): %s" % (not weak.is_countermodel))
    print()

# No fixed universe size suffices: omega_n evaluates to 1 whenever |U| <= n
# by pigeonhole, yet a universe of Bell(n)+1 elements refutes it.
w = omega(2)
print("omega_2 =", to_text(w))
cm = omega_countermodel(2)
value = eval_formula(w, cm)
print("on |U| = 3 with each p_i isolating element i it evaluates to",
      "0 (the blob)" if value.is_bottom() else value)
