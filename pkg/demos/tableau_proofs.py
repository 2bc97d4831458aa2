"""Proving partition tautologies with semantic tableaus.

The prover starts from (u0,u1):F formula and tries to build a countermodel.
If every branch dies in a contradiction the formula is proved; the first
complete open branch yields a countermodel read off the atomic F-statements.
Some searches can run forever, so budgets turn the prover into an honest
three-valued oracle: proved / countermodel / unknown.
"""

from partlog import ProverConfig, parse, prove, verify_outcome
from partlog.semantics import assignment_to_json
from partlog.tableau import trace_to_json

def show(text, cfg=None):
    f = parse(text)
    out = prove(f, cfg)
    print(text)
    print("   verdict:", out.verdict)
    if out.verdict == "proved":
        steps = trace_to_json(out.trace)["steps"]
        rules = sorted({s["rule"] for s in steps})
        print("   %d trace steps using rules: %s" % (len(steps), ", ".join(rules)))
    elif out.verdict == "countermodel":
        print("   model:", assignment_to_json(out.assignment)["bindings"])
        print("   falsified pair:", out.pair)
    else:
        print("   gave up:", out.reason)
    print("   verify_outcome:", verify_outcome(f, out))
    print()


print("=== tautologies: every branch closes ===")
show("(s /\\ (s => p)) => p")
show("p => (s => p)")
show("(s /\\ (s => p)) => (s /\\ p)")
show("(s => p) \\/ ((s => p) => p)")   # weak excluded middle for pi-negation
show("(s | t) | (s /\\ t)")

print("=== refutable formulas: an open branch gives the model ===")
show("((s => p) => s) => s")            # Peirce: sigma spans the root pair, pi is the blob
show("s => ((s => p) => (s /\\ p))")

print("=== the Devil's tableau escape ===")
# Alternating element-introducing rules could grow the branch forever, but
# checking back-chains over existing elements first finds a finite model.
show("~~((s /\\ t) \\/ (s | t))", ProverConfig(max_elements=5))

print("=== budgets make the limits explicit ===")
show("~~((s /\\ t) \\/ (s | t))", ProverConfig(max_elements=2))
