# Wreaths: reading a cyclic order k at a time until the start comes back.
#
# A set of wreaths whose expansions cover every k-subset exactly once is a
# wreath decomposition.  The search is exact cover with a step budget.

from cliquetile.wreath import (
    BudgetExceeded,
    Wreath,
    search_wreaths,
    verify_wreath_decomposition,
    wreath_decomposition_search,
    wreath_expand,
)

w = Wreath((1, 2, 3, 4, 5), 0, 2)
print("expand", w.order, "k=2:", wreath_expand(w))

w = Wreath((1, 2, 3, 4, 5, 6), 0, 4)
print("expand", w.order, "k=4:", wreath_expand(w))

for n, k in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)]:
    out = search_wreaths(n, k, budget=200_000)
    line = out.ledger_line(n, k)
    if out.status == "found":
        ok = verify_wreath_decomposition(n, k, out.wreaths).ok
        line += f"  ({len(out.wreaths)} wreaths, verified {ok})"
    print(line)

try:
    wreath_decomposition_search(6, 3, cap=1)
except BudgetExceeded as exc:
    print("tiny budget:", exc.steps, "steps, gave up")
