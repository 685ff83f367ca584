"""Generalized orthopair values and the rung transport.

A q-rung orthopair fuzzy value relaxes the constraint to mu^q + nu^q <= 1;
larger rungs q admit more simultaneous support and opposition.  Raising the
components to the q-th power identifies each rung with the base (q = 1)
space, and that bijection transports orders, negations, and aggregation
operators to every rung.
"""

from ifvkit import (
    QOrderKind,
    from_ifv,
    make_qrofn,
    negate_lw,
    qcmp,
    qrofwa,
    scores,
    to_ifv,
)

a = make_qrofn(0.6, 0.8, q=2.0)  # invalid at q = 1, fine at q = 2
print(f"a = {a}")
s = scores(a)
print(f"  powered score {s.s_lw:+.2f}, powered accuracy {s.h_lw:.2f}, "
      f"similarity {s.l_wu:.2f}")
print()

img = to_ifv(a)
print(f"transport to the base space: {img}")
print(f"and back: {from_ifv(img, 2.0)}")
print()

b = make_qrofn(0.8, 0.6, q=2.0)
print(f"b = {b}")
print(f"powered-score order:    {qcmp(a, b, QOrderKind.LW).name}")
print(f"similarity-first order: {qcmp(a, b, QOrderKind.WU).name}")
print()

print(f"negation of a: {negate_lw(a)}")
print(f"weighted average of a, b: {qrofwa([a, b], [0.5, 0.5])}")
