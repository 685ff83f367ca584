"""The bridge between the two orders, and the strong negations.

A piecewise rational bijection carries the similarity-first order onto the
score-first order while preserving comparisons, so anything proved for one
order transports to the other.  Each order also carries a strong negation:
an order-reversing involution that fixes the balanced line.
"""

from ifvkit import (
    OrderKind,
    cmp,
    make_ifv,
    negate_xy,
    negate_zx,
    score,
    similarity_l,
    xy_to_zx,
    zx_to_xy,
)

a = make_ifv(0.6, 0.2)
image = zx_to_xy(a)
print(f"a = {a}  with L(a) = {similarity_l(a):.4f}")
print(f"image under the order bridge: {image}")
print(f"round trip: {xy_to_zx(image)}")
print()

# The bridge preserves comparisons: ranking before == ranking after.
b = make_ifv(0.3, 0.4)
before = cmp(a, b, OrderKind.ZX)
after = cmp(zx_to_xy(a), zx_to_xy(b), OrderKind.XY)
print(f"cmp(a, b) similarity-first: {before.name}, images score-first: {after.name}")
print()

# The score-first negation reflects the score and is an involution.
n = negate_xy(a)
print(f"negation of {a} is {n}")
print(f"scores reflect: s(a) = {score(a):+.2f}, s(neg a) = {score(n):+.2f}")
print(f"double negation returns: {negate_xy(n)}")
print()

# The similarity-first negation is the same construction conjugated
# through the bridge; on the balanced line both shift toward hesitancy.
c = make_ifv(0.3, 0.3)
print(f"similarity-first negation of {c} is {negate_zx(c)}")
