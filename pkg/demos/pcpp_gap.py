"""The shovel test accepts a point the exact hull rejects.

The centre of the spiral staircase's middle plane cannot be cut off by any
shovel, so it belongs to the pc++ outer approximation.  The exact hull is
just five segments and does not contain it.
"""

from fractions import Fraction

from rchull import membership, pcpp_member, rank_one_hull

S = [(1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)]
M, _ = rank_one_hull(S)

for q in [(Fraction(1, 2), Fraction(1, 2), 1), (0, Fraction(1, 2), 1), (10, 10, 10), (0, 0, -1)]:
    inside, shovel = pcpp_member(S, q)
    label = ", ".join(str(c) for c in q)
    print(f"({label}): hull {membership(M, q)}, pc++ {inside}")
    if shovel is not None:
        side = "z >" if shovel.eps > 0 else "z <"
        print(f"    cut off by  {shovel.a}*x + {shovel.b}*y + ({shovel.c}) > 0  and  {side} {shovel.z0}")
