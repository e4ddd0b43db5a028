"""Exact arithmetic in cyclotomic fields, plus q-number combinatorics.

Every scalar in this package is a ``Cyc``: a residue modulo the m-th
cyclotomic polynomial, i.e. an element of the field Q(zeta_m).  The
coefficient vector has length phi(m) and is stored as a tuple of integers
over a single positive denominator, normalized so the gcd of all entries
and the denominator is 1.  Working modulo the cyclotomic polynomial (not
x^m - 1) keeps the structure a field, so ranks and kernels downstream are
well defined.

Values with different conductors mix freely: binary operations embed both
sides into the lcm conductor.  Zero and rational constants are shrunk to
conductor 1 on construction, which keeps the common all-rational case on
a single-integer fast path.
"""

from fractions import Fraction
from math import gcd

INFINITE = float("inf")


# ---------------------------------------------------------------------------
# cyclotomic polynomial tables

_cyclotomic_cache = {}


def _polydiv_exact(num, den):
    # exact division of integer polynomials, den monic; coeffs low to high
    num = list(num)
    k = len(den) - 1
    out = [0] * (len(num) - k)
    for i in range(len(num) - 1, k - 1, -1):
        c = num[i]
        if c:
            out[i - k] = c
            for j in range(k + 1):
                num[i - k + j] -= c * den[j]
    assert not any(num), "non-exact polynomial division"
    return out


def cyclotomic(m):
    """Integer coefficients of the m-th cyclotomic polynomial, constant first."""
    poly = _cyclotomic_cache.get(m)
    if poly is None:
        poly = [-1] + [0] * (m - 1) + [1]
        for d in range(1, m):
            if m % d == 0:
                poly = _polydiv_exact(poly, cyclotomic(d))
        poly = tuple(poly)
        _cyclotomic_cache[m] = poly
    return poly


def euler_phi(m):
    return len(cyclotomic(m)) - 1


_power_rows = {}


def _powers(m, upto):
    """Rows x^e mod Phi_m for e < upto, as integer tuples of length phi(m)."""
    rows = _power_rows.setdefault(m, [])
    if len(rows) < upto:
        phi = cyclotomic(m)
        k = len(phi) - 1
        while len(rows) < min(upto, k):
            e = len(rows)
            rows.append(tuple(1 if i == e else 0 for i in range(k)))
        while len(rows) < upto:
            prev = rows[-1]
            lead = prev[k - 1]
            rows.append(tuple((prev[i - 1] if i else 0) - lead * phi[i]
                              for i in range(k)))
    return rows


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    # over Fractions; b trimmed and nonzero
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b):
        d = len(a) - len(b)
        c = a[-1] / b[-1]
        q[d] = c
        for i, v in enumerate(b):
            a[d + i] -= c * v
    _trim(q)
    return q, a


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _poly_mul_frac(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


_embed_cache = {}


def _embedding(m, big):
    """Images of the conductor-m power basis inside conductor ``big``."""
    key = (m, big)
    table = _embed_cache.get(key)
    if table is None:
        step = big // m
        k = euler_phi(m)
        rows = _powers(big, (k - 1) * step + 1)
        table = tuple(rows[i * step] for i in range(k))
        _embed_cache[key] = table
    return table


# ---------------------------------------------------------------------------
# the scalar type

def _embed_vec(c, big):
    """Raw integer coefficient vector of c at conductor ``big`` (same den)."""
    if c.m == big:
        return list(c.num)
    k = euler_phi(big)
    if c.m == 1:
        out = [0] * k
        out[0] = c.num[0]
        return out
    table = _embedding(c.m, big)
    out = [0] * k
    for v, row in zip(c.num, table):
        if v:
            for i in range(k):
                out[i] += v * row[i]
    return out


def _align(a, b):
    """Common-conductor raw vectors: (m, num_a, den_a, num_b, den_b)."""
    if a.m == b.m:
        return a.m, a.num, a.den, b.num, b.den
    m = a.m * b.m // gcd(a.m, b.m)
    return m, _embed_vec(a, m), a.den, _embed_vec(b, m), b.den


def _normalize(m, num, den):
    if den < 0:
        den = -den
        num = [-v for v in num]
    g = den
    for v in num:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = [v // g for v in num]
    if not any(num[1:]):
        # constant: lives in Q, shrink to conductor 1
        obj = object.__new__(Cyc)
        obj.m = 1
        obj.num = (num[0] if num else 0,)
        obj.den = den if num and num[0] else 1
        return obj
    obj = object.__new__(Cyc)
    obj.m = m
    obj.num = tuple(num)
    obj.den = den
    return obj


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, int):
        return _normalize(1, [x], 1)
    if isinstance(x, Fraction):
        return _normalize(1, [x.numerator], x.denominator)
    return NotImplemented


class Cyc:
    """An exact cyclotomic number: rationals modulo the m-th cyclotomic polynomial."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m, coeffs):
        """Build from a sequence of ints or Fractions of length phi(m)."""
        k = euler_phi(m)
        coeffs = list(coeffs)
        if len(coeffs) != k:
            raise ValueError(f"need {k} coefficients for conductor {m}")
        den = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        num = [int(c * den) if isinstance(c, Fraction) else c * den
               for c in coeffs]
        other = _normalize(m, num, den)
        self.m = other.m
        self.num = other.num
        self.den = other.den

    # -- views ----------------------------------------------------------

    @property
    def conductor(self):
        return self.m

    @property
    def coeffs(self):
        """Coefficient vector as Fractions, length phi(m)."""
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.m == 1 and self.den == 1 and self.num[0] == 1

    def __bool__(self):
        return any(self.num)

    def embed(self, big):
        """The same value expressed at conductor ``big`` (m must divide big).

        The result keeps conductor ``big`` even for rational constants, so
        `.key()` of embedded values is canonical at that conductor.
        """
        if big == self.m:
            return self
        if big % self.m:
            raise ValueError(f"{self.m} does not divide {big}")
        out = object.__new__(Cyc)
        out.m = big
        out.num = tuple(_embed_vec(self, big))
        out.den = self.den
        return out

    def key(self):
        """Hashable canonical form at this value's own conductor."""
        return (self.m, self.den, self.num)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m, na, da, nb, db = _align(self, other)
        if da == db:
            return _normalize(m, [x + y for x, y in zip(na, nb)], da)
        g = gcd(da, db)
        fa, fb = db // g, da // g
        return _normalize(m, [x * fa + y * fb for x, y in zip(na, nb)], da * fa)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Cyc)
        out.m = self.m
        out.num = tuple(-v for v in self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.m == 1 and b.m == 1:
            return _normalize(1, [a.num[0] * b.num[0]], a.den * b.den)
        if a.m == 1:
            v = a.num[0]
            return _normalize(b.m, [v * y for y in b.num], a.den * b.den)
        if b.m == 1:
            v = b.num[0]
            return _normalize(a.m, [x * v for x in a.num], a.den * b.den)
        m, na, da, nb, db = _align(a, b)
        k = len(na)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        conv[i + j] += x * y
        out = conv[:k]
        rows = _powers(m, 2 * k - 1)
        for e in range(k, 2 * k - 1):
            c = conv[e]
            if c:
                row = rows[e]
                for i in range(k):
                    out[i] += c * row[i]
        return _normalize(m, out, da * db)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse (the residue ring is a field)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.m == 1:
            return _normalize(1, [self.den], self.num[0])
        # extended euclid in Q[x] against the cyclotomic polynomial, which is
        # irreducible, so the gcd is a nonzero constant
        phi = [Fraction(c) for c in cyclotomic(self.m)]
        f = [Fraction(v, self.den) for v in self.num]
        _trim(f)
        r0, r1 = phi, f
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul_frac(q, s1))
        c = r1[0]
        inv = [s / c for s in s1]
        k = euler_phi(self.m)
        inv = inv + [Fraction(0)] * (k - len(inv))
        den = 1
        for v in inv:
            den = den * v.denominator // gcd(den, v.denominator)
        return _normalize(self.m, [int(v * den) for v in inv[:k]], den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.m == other.m:
            return self.den == other.den and self.num == other.num
        return (self - other).is_zero()

    # equal values can carry different conductors, so no reliable hash;
    # use .key() after embedding to a common conductor where one is needed
    __hash__ = None

    def __repr__(self):
        if self.m == 1:
            if self.den == 1:
                return f"Cyc({self.num[0]})"
            return f"Cyc({self.num[0]}/{self.den})"
        parts = []
        for e, v in enumerate(self.num):
            if v:
                frac = f"{v}" if self.den == 1 else f"{v}/{self.den}"
                parts.append(f"{frac}*z{self.m}^{e}")
        return "Cyc(" + " + ".join(parts) + ")"


def _fast(m, num, den):
    return _normalize(m, list(num), den)


ZERO = _fast(1, (0,), 1)
ONE = _fast(1, (1,), 1)
MINUS_ONE = _fast(1, (-1,), 1)


def zero():
    return ZERO


def one():
    return ONE


def integer(n):
    """The rational integer n as a Cyc."""
    return _fast(1, (n,), 1)


def rational(p, q=1):
    return _fast(1, (p,), q)


def root_of_unity(m, e):
    """zeta_m^e as a Cyc, reduced to a minimal conductor."""
    if m < 1:
        raise ValueError("conductor must be positive")
    e %= m
    if e == 0:
        return ONE
    g = gcd(e, m)
    m0, e0 = m // g, e // g
    if m0 == 1:
        return ONE
    if m0 == 2:
        return MINUS_ONE
    sign = 1
    if m0 % 4 == 2:
        # Q(zeta_{2u}) = Q(zeta_u) for odd u: zeta_{2u} = -zeta_u^{(u+1)/2}
        u = m0 // 2
        p = (e0 * ((u + 1) // 2)) % u
        sign = -1  # e0 is odd since gcd(e0, m0) = 1 and m0 is even
        m0 = u
    else:
        p = e0
    row = _powers(m0, max(euler_phi(m0), p + 1))[p]
    if sign < 0:
        row = [-v for v in row]
    return _normalize(m0, list(row), 1)


def order(q):
    """N(q): the multiplicative order of q; INFINITE for q = 1 or a non-root."""
    q = _coerce(q)
    if q.is_zero() or q.is_one():
        return INFINITE
    # torsion of Q(zeta_m)* is the group of lcm(2, m)-th roots of unity
    bound = q.m if q.m % 2 == 0 else 2 * q.m
    p = q
    for k in range(1, bound + 1):
        if p.is_one():
            return k
        p = p * q
    return INFINITE


# ---------------------------------------------------------------------------
# q-numbers, evaluated from integer polynomials (they all lie in Z[q])

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


_gauss_cache = {}


def gaussian_poly(n, m):
    """The Gaussian binomial (n choose m)_q as an integer polynomial in q."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    key = (n, m)
    poly = _gauss_cache.get(key)
    if poly is None:
        if m == 0 or m == n:
            poly = [1]
        else:
            # q-Pascal: C(n,m) = C(n-1,m-1) + q^m C(n-1,m)
            left = gaussian_poly(n - 1, m - 1)
            right = gaussian_poly(n - 1, m)
            poly = list(left) + [0] * (m + len(right) - len(left))
            for i, v in enumerate(right):
                poly[m + i] += v
        _gauss_cache[key] = poly
    return list(poly)


def _eval_poly(poly, q):
    acc = ZERO
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def q_number(n, q):
    """(n)_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _eval_poly([1] * n, _coerce(q))


def q_factorial(n, q):
    """(n)_q! = (1)_q (2)_q ... (n)_q."""
    q = _coerce(q)
    out = ONE
    for i in range(1, n + 1):
        out = out * q_number(i, q)
    return out


def q_binomial(n, m, q):
    """Gaussian binomial evaluated at q, via the integer polynomial expansion."""
    return _eval_poly(gaussian_poly(n, m), _coerce(q))


# ---------------------------------------------------------------------------
# text form: sums of (num, den, exp) terms meaning (num/den) * zeta_m^exp

def to_terms(c):
    """Nonzero terms of c as (num, den, exp) triples over the power basis."""
    return [(v, c.den, e) for e, v in enumerate(c.num) if v]


def from_terms(m, terms):
    """Rebuild a Cyc at conductor m from (num, den, exp) triples."""
    k = euler_phi(m)
    acc = ZERO
    for num, den, e in terms:
        if e >= k:
            raise ValueError(f"exponent {e} out of range for conductor {m}")
        vec = [0] * k
        vec[e] = num
        acc = acc + _fast(m, vec, den)
    return acc


def format_scalar(c):
    """Whitespace-free token: comma-joined num[/den]:exp terms; '0:0' for zero."""
    terms = to_terms(c)
    if not terms:
        return "0:0"
    parts = []
    for num, den, e in terms:
        frac = str(num) if den == 1 else f"{num}/{den}"
        parts.append(f"{frac}:{e}")
    return ",".join(parts)


def parse_scalar(token, m):
    """Parse the token syntax of ``format_scalar`` at conductor m.

    Bare integers are accepted as a shorthand for num:0.
    """
    token = token.strip()
    try:
        return integer(int(token))
    except ValueError:
        pass
    terms = []
    for part in token.split(","):
        frac, _, exp = part.rpartition(":")
        if not frac:
            raise ValueError(f"bad scalar token {token!r}")
        if "/" in frac:
            num, den = frac.split("/")
            terms.append((int(num), int(den), int(exp)))
        else:
            terms.append((int(frac), 1, int(exp)))
    return from_terms(m, terms)
