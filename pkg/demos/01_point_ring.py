"""Arithmetic in the coefficient rings.

The Burnside ring A(C2) = Z{1, g} with g^2 = 2g acts everywhere; we write
k = 2 - g, so k^2 = 2k and (1 - k)^2 = 1.  The cohomology of a point
contributes the Euler class e of the sign representation, the class xi
with restriction iota^2, the infinitely divisible classes e^{-n} k, and
the transfers t(iota^{2n}) of the invertible level-e classes.
"""

from c2quadrics import BurnsideElt, LevelECoeff, PointElt, point_phi, point_rho, point_tau
from c2quadrics.coefficients import negkappa, pos, trans

g = BurnsideElt(0, 1)
print("g * g      =", g * g)
print("kappa^2    =", (BurnsideElt(2) - g) * (BurnsideElt(2) - g), " (= 2*kappa)")

e = PointElt.monomial(pos(1, 0))
xi = PointElt.monomial(pos(0, 1))
kappa = PointElt.monomial(negkappa(0))
one = PointElt.from_int(1)

print("\nThe square root of 1 used throughout the multiplicative structure:")
print("(1 - k)^2  =", (one - kappa) * (one - kappa))

print("\nThe rules that drive the divisible classes:")
print("e^-2 k * xi       =", PointElt.monomial(negkappa(2)) * xi)
print("e^-4 k * e^2      =", PointElt.monomial(negkappa(4)) * e * e)
print("t(iota^-2) * e^2  =", PointElt.monomial(trans(-1)) * e * e)

print("\nTransfers in nonnegative degrees collapse:")
print("t(1)       =", point_tau(LevelECoeff.one()), " (= g)")
print("t(iota^2)  =", point_tau(LevelECoeff.iota(2)), " (= 2 xi)")
print("t(iota^3)  =", point_tau(LevelECoeff.iota(3)))

print("\nRestriction and fixed points are ring maps:")
x = kappa * 3 + one * 2
print("x = 2 + 3k:   rho(x) =", point_rho(x), "  phi(x) =", point_phi(x))
print("phi(1 - k) =", point_phi(one - kappa))

print("\nMixed classes e^i xi^j (i, j >= 1) are 2-torsion:")
exi = e * xi
print("e*xi       =", exi, "   2*e*xi =", exi * 2)
