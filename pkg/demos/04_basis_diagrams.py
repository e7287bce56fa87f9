"""Basis slices and the dot diagrams.

For each coset of RO(C2) in the grading lattice, the cohomology is a
free module with 2(p+q) generators of type C2/C2 (solid dots, one at
grading a + b*sigma plotted at (a, b)) and, for the odd-odd quadrics,
one generator of type C2/e whose position is only defined up to the
invertible class iota, hence the dashed line a + b = const.
"""

from c2quadrics import basis_slice, make_quadric
from c2quadrics.diagram import diagram

for m, n in [(11, 7), (15, 7)]:
    Q = make_quadric(m, n)
    rows = basis_slice(Q, 0, ((-4, 44), (-4, 44)))
    c2 = [(g.a, g.b) for g, label in rows if label == "C2/C2"]
    ce = [(g.a, g.b) for g, label in rows if label == "C2/e"]
    print("Q^{%d,%d}, coset 0: %d solid + %d open" % (m, n, len(c2), len(ce)))
    window = ((-2, 2 * (Q.p + Q.q) + 12), (-2, 18))
    print(diagram(Q, 0, window, "ascii"))

print("an even-even quadric has no free-orbit line:")
print(diagram(make_quadric(4, 4), 0, ((-2, 14), (-2, 10)), "ascii"))

svg = diagram(make_quadric(11, 7), 0, ((-2, 30), (-2, 18)), "svg")
with open("demo_q11_7.svg", "w") as fh:
    fh.write(svg)
print("wrote demo_q11_7.svg (%d bytes)" % len(svg))
