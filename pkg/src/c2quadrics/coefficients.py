"""Exact arithmetic in the coefficient rings.

Three rings live here.

* ``BurnsideElt`` -- the Burnside ring A(C2) = Z{1, g} with g*g = 2g.
  We write k (kappa) for 2 - g; then k*k = 2k and (1-k)^2 = 1.

* ``LevelECoeff`` -- the level-C2/e coefficient ring Z[iota^{+-1}], with
  the involution t acting by t(iota^n) = (-1)^n iota^n.

* ``PointElt`` -- the subring of the cohomology of a point (level C2/C2)
  generated by the classes the quadric computations use:

      Pos(i, j)   = e^i xi^j          grading  i*sigma + j*(2*sigma - 2)
      NegKappa(n) = e^{-n} k          grading  -n*sigma   (n = 0 is k)
      Trans(n)    = t(iota^{2n})      grading  2n*(sigma - 1)

  Canonical monomials are Pos(i, j) with i, j >= 0, NegKappa(n) with
  n >= 0, and Trans(n) with n <= -1.  The transfers in nonnegative
  degrees are rewritten:

      Trans(0) = g = 2 - k,        Trans(n) = 2 xi^n   (n >= 1),

  and mixed monomials e^i xi^j with i, j >= 1 are 2-torsion, so their
  coefficients are stored mod 2.  (Both facts are forced by
  associativity: k*(e*xi) = 0 while (k*e)*xi = 2*e*xi, and
  t(iota^{-2})*xi^2 = Trans(1) while (t(iota^{-2})*xi)*xi = 2*xi.)

Monomials are encoded as small tuples: ("p", i, j), ("k", n), ("t", n).
"""

from __future__ import annotations

from .grading import Grading


class InhomogeneousError(ValueError):
    """An operation received a sum of monomials of unequal gradings."""


# ---------------------------------------------------------------------------
# Burnside ring


class BurnsideElt:
    """u + v*g in A(C2), exact integer arithmetic."""

    __slots__ = ("u", "v")

    def __init__(self, u=0, v=0):
        self.u = u
        self.v = v

    def __eq__(self, other):
        if isinstance(other, int):
            other = BurnsideElt(other)
        if not isinstance(other, BurnsideElt):
            return NotImplemented
        return (self.u, self.v) == (other.u, other.v)

    def __hash__(self):
        return hash((self.u, self.v))

    def __add__(self, other):
        if isinstance(other, int):
            other = BurnsideElt(other)
        return BurnsideElt(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElt(-self.u, -self.v)

    def __sub__(self, other):
        if isinstance(other, int):
            other = BurnsideElt(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = BurnsideElt(other)
        # g*g = 2g
        return BurnsideElt(
            self.u * other.u,
            self.u * other.v + self.v * other.u + 2 * self.v * other.v,
        )

    __rmul__ = __mul__

    def cardinality(self):
        """epsilon(u + v g) = u + 2v, the mark at the free orbit."""
        return self.u + 2 * self.v

    def fixed_mark(self):
        """The mark at the fixed point: g has no fixed points."""
        return self.u

    def __repr__(self):
        return "BurnsideElt(%d, %d)" % (self.u, self.v)


G = BurnsideElt(0, 1)
KAPPA_A = BurnsideElt(2, -1)   # kappa = 2 - g inside A(C2)


def burnside_mul(x, y):
    return x * y


# ---------------------------------------------------------------------------
# Level-e coefficients Z[iota^{+-1}]


class LevelECoeff:
    """Sparse Laurent polynomial in iota; keys are iota-exponents."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {}
        if c:
            for k, v in c.items():
                if v:
                    self.c[k] = v

    @staticmethod
    def iota(n=1, coeff=1):
        return LevelECoeff({n: coeff})

    @staticmethod
    def one():
        return LevelECoeff({0: 1})

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, LevelECoeff):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return LevelECoeff(out)

    def __neg__(self):
        return LevelECoeff({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LevelECoeff({k: other * v for k, v in self.c.items()})
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return LevelECoeff(out)

    __rmul__ = __mul__

    def t_act(self):
        """The involution t: iota -> -iota."""
        return LevelECoeff({k: (v if k % 2 == 0 else -v) for k, v in self.c.items()})

    def one_plus_t(self):
        return self + self.t_act()

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(
            "%d*iota^%d" % (v, k) for k, v in sorted(self.c.items())
        )


def levele_taction(x):
    return x.t_act()


# ---------------------------------------------------------------------------
# Point ring monomials


def pos(i, j):
    return ("p", i, j)


def negkappa(n):
    return ("k", n)


def trans(n):
    return ("t", n)


ONE_MONO = pos(0, 0)
E = pos(1, 0)
XI = pos(0, 1)
KAPPA = negkappa(0)


def monomial_grading(mono):
    tag = mono[0]
    if tag == "p":
        i, j = mono[1], mono[2]
        return Grading(-2 * j, i + 2 * j, 0)
    if tag == "k":
        return Grading(0, -mono[1], 0)
    # transfer t(iota^{2n})
    n = mono[1]
    return Grading(-2 * n, 2 * n, 0)


def _mono_mul(m1, m2):
    """Product of two canonical monomials, as a dict {monomial: int}."""
    t1, t2 = m1[0], m2[0]
    if t1 > t2:  # orders "k" < "p" < "t"
        m1, m2 = m2, m1
        t1, t2 = t2, t1
    if t1 == "p" and t2 == "p":
        return {pos(m1[1] + m2[1], m1[2] + m2[2]): 1}
    if t1 == "k" and t2 == "p":
        n, i, j = m1[1], m2[1], m2[2]
        if j > 0:
            return {}                       # e^{-n} k * xi = 0
        if i <= n:
            return {negkappa(n - i): 1}
        return {pos(i - n, 0): 2}           # k e^m = 2 e^m for m > 0
    if t1 == "k" and t2 == "k":
        return {negkappa(m1[1] + m2[1]): 2}
    if t1 == "k" and t2 == "t":
        return {}                           # k * transfer = 0
    if t1 == "p" and t2 == "t":
        i, j, n = m1[1], m1[2], m2[1]
        if i > 0:
            return {}                       # e * t(...) = t(rho(e) ...) = 0
        return _normalize_trans(n + j, 1)
    # transfer * transfer
    return _normalize_trans(m1[1] + m2[1], 2)


def _normalize_trans(n, coeff):
    """t(iota^{2n}) for any n, as a canonical dict."""
    if n <= -1:
        return {trans(n): coeff}
    if n == 0:
        return {pos(0, 0): 2 * coeff, negkappa(0): -coeff}
    return {pos(0, n): 2 * coeff}


class PointElt:
    """Homogeneous element of the point subring: {monomial: int}."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {}
        if c:
            for m, v in c.items():
                if m[0] == "p" and m[1] >= 1 and m[2] >= 1:
                    v %= 2
                if v:
                    self.c[m] = v

    @staticmethod
    def from_int(n):
        return PointElt({ONE_MONO: n})

    @staticmethod
    def from_burnside(x):
        # u + v g  =  (u + 2v) - v*kappa
        return PointElt({ONE_MONO: x.u + 2 * x.v, KAPPA: -x.v})

    @staticmethod
    def monomial(mono, coeff=1):
        return PointElt({mono: coeff})

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if isinstance(other, int):
            other = PointElt.from_int(other)
        if not isinstance(other, PointElt):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = PointElt.from_int(other)
        out = dict(self.c)
        for m, v in other.c.items():
            out[m] = out.get(m, 0) + v
        return PointElt(out)

    __radd__ = __add__

    def __neg__(self):
        return PointElt({m: -v for m, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = PointElt.from_int(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PointElt({m: other * v for m, v in self.c.items()})
        if isinstance(other, BurnsideElt):
            other = PointElt.from_burnside(other)
        out = {}
        for m1, v1 in self.c.items():
            for m2, v2 in other.c.items():
                for m, w in _mono_mul(m1, m2).items():
                    out[m] = out.get(m, 0) + v1 * v2 * w
        return PointElt(out)

    __rmul__ = __mul__

    def grading(self):
        """Common grading of all monomials; raises if mixed."""
        g = None
        for m in self.c:
            gm = monomial_grading(m)
            if g is None:
                g = gm
            elif g != gm:
                raise InhomogeneousError(
                    "mixed gradings %s and %s in point element" % (g, gm)
                )
        return g

    def check_homogeneous(self):
        self.grading()
        return self

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for m, v in sorted(self.c.items()):
            name = _mono_str(m)
            if name == "1":
                parts.append("%d" % v)
            elif v == 1:
                parts.append(name)
            elif v == -1:
                parts.append("-%s" % name)
            else:
                parts.append("%d*%s" % (v, name))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        out = []
        for m, v in sorted(self.c.items()):
            out.append({"tag": m[0], "args": list(m[1:]), "coeff": v})
        return out

    @staticmethod
    def from_json(doc):
        return PointElt({tuple([d["tag"]] + d["args"]): d["coeff"] for d in doc})


def _mono_str(m):
    tag = m[0]
    if tag == "p":
        i, j = m[1], m[2]
        parts = []
        if i:
            parts.append("e^%d" % i if i != 1 else "e")
        if j:
            parts.append("xi^%d" % j if j != 1 else "xi")
        return "*".join(parts) if parts else "1"
    if tag == "k":
        n = m[1]
        return "e^-%d*k" % n if n else "k"
    return "t(iota^%d)" % (2 * m[1])


ONE = PointElt.from_int(1)
ZERO_PT = PointElt()
E_PT = PointElt.monomial(E)
XI_PT = PointElt.monomial(XI)
KAPPA_PT = PointElt.monomial(KAPPA)
G_PT = PointElt.from_burnside(G)
UNIT_1MK = ONE - KAPPA_PT   # 1 - kappa, a square root of 1


def point_mul(x, y):
    x.check_homogeneous()
    y.check_homogeneous()
    return x * y


def point_rho(x):
    """Restriction to level C2/e; ring homomorphism onto Z[iota^{+-1}]."""
    out = {}
    for m, v in x.c.items():
        tag = m[0]
        if tag == "p":
            i, j = m[1], m[2]
            if i == 0:
                out[2 * j] = out.get(2 * j, 0) + v
        elif tag == "t":
            n = m[1]
            out[2 * n] = out.get(2 * n, 0) + 2 * v
        # NegKappa restricts to 0
    return LevelECoeff(out)


def point_phi(x):
    """Fixed-point map to Z: e -> 1, xi -> 0, kappa -> 2, transfers -> 0."""
    out = 0
    for m, v in x.c.items():
        tag = m[0]
        if tag == "p":
            if m[2] == 0:
                out += v
        elif tag == "k":
            out += 2 * v
    return out


def point_tau(w):
    """Transfer of a level-e coefficient: t(iota^n) vanishes for odd n."""
    out = PointElt()
    for n, v in w.c.items():
        if n % 2 == 0:
            out = out + PointElt(_normalize_trans(n // 2, 1)) * v
    return out


def transfer_witness(x):
    """If x = t(w) for some level-e w, return w; otherwise None.

    The transfer image is spanned by Trans(n) (n < 0), g = 2 - kappa, and
    2*xi^n (n > 0); everything with an e or an e^{-n} kappa component, or
    an odd pure part, is excluded.
    """
    w = {}
    residue = dict(x.c)
    for m in list(residue):
        if m[0] == "t":
            w[2 * m[1]] = residue.pop(m)
    # grading-0 part: u*1 + v*kappa is a transfer iff u = -2v (= lambda*g)
    u = residue.pop(ONE_MONO, 0)
    v = residue.pop(KAPPA, 0)
    if u != -2 * v:
        # try pure xi powers: coefficient must be even
        residue[ONE_MONO] = u
        residue[KAPPA] = v
    else:
        if v:
            w[0] = w.get(0, 0) - v
    for m in list(residue):
        val = residue[m]
        if val == 0:
            del residue[m]
            continue
        if m[0] == "p" and m[1] == 0 and m[2] > 0 and val % 2 == 0:
            w[2 * m[2]] = w.get(2 * m[2], 0) + val // 2
            del residue[m]
    if any(residue.values()):
        return None
    return LevelECoeff(w)
