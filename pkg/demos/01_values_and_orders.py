"""Values, ranking functionals, and the two linear orders.

An intuitionistic fuzzy value (IFV) is a pair <mu, nu> of membership and
non-membership degrees with mu + nu <= 1.  Four functionals summarize it, and
two different lexicographic orders rank values totally.
"""

from ifvkit import (
    OrderKind,
    accuracy,
    cmp,
    indeterminacy,
    make_ifv,
    score,
    similarity_l,
)

a = make_ifv(0.5, 0.3)
b = make_ifv(0.4, 0.1)

print(f"a = {a}")
print(f"  score         s(a) = {score(a):+.3f}   (net support)")
print(f"  accuracy      h(a) = {accuracy(a):.3f}    (how much is decided)")
print(f"  indeterminacy pi(a) = {indeterminacy(a):.3f}   (hesitancy)")
print(f"  similarity    L(a) = {similarity_l(a):.4f}  (closeness to full support)")
print()

# The score-then-accuracy order ranks b above a: its score is higher.
print(f"b = {b}")
print(f"score-first order:      cmp(a, b) = {cmp(a, b, OrderKind.XY).name}")

# The similarity-then-accuracy order agrees here, but the two orders
# disagree on many pairs: they sort the same set of values differently.
print(f"similarity-first order: cmp(a, b) = {cmp(a, b, OrderKind.ZX).name}")
print()

# Both orders share the same bottom <0,1> and top <1,0>.
from ifvkit import BOTTOM, TOP

print(f"bottom = {BOTTOM}, top = {TOP}")
for ord in OrderKind:
    assert cmp(BOTTOM, a, ord).name == "LESS"
    assert cmp(a, TOP, ord).name == "LESS"
print("every value sits between bottom and top under both orders")
