"""The set file format and expression language.

Sets live in a plain text format, one block per set; expressions combine
them with ASCII operators (~ & | \\ + plus named functions) and three
root-level predicates. Every rejection carries a line and column.

Run:  python demos/dsl_tour.py
"""

import json

from ins import SourceError, evaluate, format_expr, format_set, parse_expr, parse_sets, set_to_json

SOURCE = """\
# two assessments over the same three criteria
set A
  capability : [0.2,0.4] [0.3,0.5] [0.3,0.5]
  trust      : [0.5,0.7] [0.0,0.2] [0.2,0.3]
  price      : [0.6,0.8] [0.2,0.3] [0.2,0.3]
end
set B
  capability : [0.5,0.7] [0.1,0.3] [0.1,0.3]
  trust      : [0.2,0.3] [0.2,0.4] [0.5,0.8]
  price      : [0.4,0.6] [0.0,0.1] [0.3,0.4]
end
# the absorbing empty set: no truth, full indeterminacy and falsity
set Z
  capability : [0,0] [1,1] [1,1]
  trust      : [0,0] [1,1] [1,1]
  price      : [0,0] [1,1] [1,1]
end
"""

env = parse_sets(SOURCE)
print("parsed sets:", ", ".join(env))

for text in (
    "A | B",
    "~(A & B)",
    "tf(A) + ff(B)",
    "scale(0.5, A | B)",
    "eq(~~A, A)",
    "subset(A & B, A)",
    "empty(A & Z)",
    "empty(A \\ A)",  # difference is not classical subtraction
):
    result = evaluate(parse_expr(text), env)
    print(f"\n>>> {text}")
    if isinstance(result, bool):
        print("true" if result else "false")
    else:
        print(format_set(result, precision=6, name="result"), end="")

# The parser reports positions; so does the evaluator.
print("\nrejected inputs:")
for bad in ("A | | B", "scale(0, A)", "A | missing", "eq(A, subset(A, B))"):
    try:
        evaluate(parse_expr(bad), env)
    except SourceError as err:
        print(f"  {bad!r:28} -> {err}")

# Printing uses minimal parentheses and reparses to the same tree.
tree = parse_expr("(A | B) & ~(A + B \\ A)")
print("\nminimal-parens rendering:", format_expr(tree))
print("stable under reparse:", parse_expr(format_expr(tree)) == tree)

# Round trip: the default precision renders endpoints exactly.
block = format_set(env["A"], name="A")
print("\nexact round trip:", parse_sets(block)["A"] == env["A"])

# JSON output for downstream tools.
print("\njson:", json.dumps(set_to_json(evaluate(parse_expr("A & B"), env), name="A&B"))[:98], "...")
