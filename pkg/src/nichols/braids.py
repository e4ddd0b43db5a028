"""Symmetric and braid group combinatorics acting on tensor powers.

Permutations are tuples of images on {0..n-1}, composed so that
``perm_mul(p, q)`` applies q first.  Braid words are tuples of signed
generator indices: +i stands for the i-th positive crossing (1-based) and
-i for its inverse.  A formal sum of braid words with cyclotomic
coefficients is a ``GroupAlgElt``; such sums have no normal form and are
compared through their actions on braided vector spaces.

Tensor vectors are sparse dicts keyed by base-d integers (see linalg);
``sigma_pass`` is the hot path that applies one crossing to such a vector.
"""

from itertools import combinations as _combinations
from itertools import permutations as _permutations

from .linalg import vec_add_into
from .scalars import ONE


# ---------------------------------------------------------------------------
# permutations

def perm_mul(p, q):
    """Composition applying q first: (p*q)(i) = p(q(i))."""
    return tuple(p[x] for x in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_length(p):
    """Coxeter length: the number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def transposition(n, i):
    """The adjacent transposition swapping positions i-1 and i (1-based i)."""
    out = list(range(n))
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def matsumoto_section(p):
    """The lexicographically least reduced word for p, as 1-based letters.

    Greedy: repeatedly strip the smallest left descent.  Any reduced word
    lifts to the same braid group element, so the choice only pins down a
    reproducible representative.
    """
    p = tuple(p)
    n = len(p)
    inv = list(perm_inv(p))
    word = []
    remaining = perm_length(p)
    while remaining:
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                word.append(i)
                inv[i - 1], inv[i] = inv[i], inv[i - 1]
                remaining -= 1
                break
    return tuple(word)


def all_permutations(n):
    return _permutations(range(n))


def shuffles(parts):
    """All (i1,...,ir)-shuffles: x whose inverse ascends on each block.

    Built directly by distributing the positions among the blocks, so the
    cost is the multinomial coefficient rather than a scan of the whole
    symmetric group.
    """
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("parts must be a nonempty list of positive integers")
    n = sum(parts)

    def place(positions, idx):
        if idx == len(parts):
            yield ()
            return
        for chosen in _combinations(positions, parts[idx]):
            taken = set(chosen)
            rest = tuple(p for p in positions if p not in taken)
            for tail in place(rest, idx + 1):
                yield chosen + tail

    out = []
    for inv in place(tuple(range(n)), 0):
        # inv lists x^-1 blockwise; combinations come out ascending, which
        # is exactly the defining condition
        out.append(perm_inv(inv))
    return out


# ---------------------------------------------------------------------------
# formal sums in the braid group algebra

class GroupAlgElt:
    """Finite formal sum of braid words with Cyc coefficients on n strands."""

    __slots__ = ("strands", "terms")

    def __init__(self, strands, terms=None):
        self.strands = strands
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @classmethod
    def from_word(cls, strands, letters, coeff=None):
        for i in letters:
            if not 1 <= abs(i) <= strands - 1:
                raise ValueError(f"letter {i} out of range on {strands} strands")
        return cls(strands, {tuple(letters): coeff if coeff is not None else ONE})

    @classmethod
    def unit(cls, strands):
        return cls(strands, {(): ONE})

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            cur = terms.get(w)
            t = c if cur is None else cur + c
            if t:
                terms[w] = t
            elif cur is not None:
                del terms[w]
        return GroupAlgElt(self.strands, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GroupAlgElt(self.strands, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgElt):
            self._check(other)
            terms = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    cur = terms.get(w)
                    t = c if cur is None else cur + c
                    if t:
                        terms[w] = t
                    elif cur is not None:
                        del terms[w]
            return GroupAlgElt(self.strands, terms)
        return GroupAlgElt(self.strands,
                           {w: c * other for w, c in self.terms.items()})

    __rmul__ = __mul__

    def _check(self, other):
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")

    def shifted(self, offset, strands):
        """Image under the inclusion sending sigma_i to sigma_(i+offset)."""
        terms = {tuple((i + offset) if i > 0 else (i - offset) for i in w): c
                 for w, c in self.terms.items()}
        return GroupAlgElt(strands, terms)

    def apply(self, bp, vec, n):
        return apply_elt(bp, self, vec, n)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        names = []
        for w, c in sorted(self.terms.items()):
            word = "e" if not w else "".join(
                f"s{i}" if i > 0 else f"S{-i}" for i in w)
            names.append(f"{c!r}*{word}")
        return f"GroupAlgElt[{self.strands}](" + " + ".join(names) + ")"


def block(a, b):
    """(a | b): a on the first strands, b shifted past them."""
    strands = a.strands + b.strands
    out = GroupAlgElt(strands)
    bs = b.shifted(a.strands, strands)
    for w1, c1 in a.terms.items():
        for w2, c2 in bs.terms.items():
            out.terms[w1 + w2] = c1 * c2
    return out


def u_elt(strands, j, i):
    """U^j_i = sigma_j sigma_(j-1) ... sigma_i."""
    if not 1 <= i <= j <= strands - 1:
        raise ValueError("need 1 <= i <= j <= strands-1")
    return GroupAlgElt.from_word(strands, range(j, i - 1, -1))


def d_elt(strands, j, i):
    """D^j_i = sigma_i sigma_(i+1) ... sigma_j."""
    if not 1 <= i <= j <= strands - 1:
        raise ValueError("need 1 <= i <= j <= strands-1")
    return GroupAlgElt.from_word(strands, range(i, j + 1))


def r_elt(strands, j, i):
    """R^j_i = (e - D^j_j sigma_j)(e - D^j_(j-1) sigma_j) ... (e - D^j_i sigma_j)."""
    if not 1 <= i <= j <= strands - 1:
        raise ValueError("need 1 <= i <= j <= strands-1")
    e = GroupAlgElt.unit(strands)
    sigma_j = GroupAlgElt.from_word(strands, (j,))
    out = e
    for k in range(j, i - 1, -1):
        out = out * (e - d_elt(strands, j, k) * sigma_j)
    return out


def symmetrizer(n):
    """The full quantum symmetrizer: sum of the lifts of all of S_n; for
    n = 0 the identity on zero strands."""
    out = GroupAlgElt(n)
    for p in all_permutations(n):
        out.terms[matsumoto_section(p)] = ONE
    return out


_shuffle_elt_cache = {}


def s_shuffle(i, j):
    """Sum of lifts of all (i,j)-shuffles, on i+j strands."""
    key = ("s", i, j)
    got = _shuffle_elt_cache.get(key)
    if got is None:
        got = GroupAlgElt(i + j)
        for x in shuffles((i, j)):
            got.terms[matsumoto_section(x)] = ONE
        _shuffle_elt_cache[key] = got
    return got


def t_shuffle(i, j):
    """Sum of lifts s(x) over x with x^-1 an (i,j)-shuffle, on i+j strands."""
    key = ("t", i, j)
    got = _shuffle_elt_cache.get(key)
    if got is None:
        got = GroupAlgElt(i + j)
        for x in shuffles((i, j)):
            got.terms[matsumoto_section(perm_inv(x))] = ONE
        _shuffle_elt_cache[key] = got
    return got


# ---------------------------------------------------------------------------
# actions on tensor powers

def sigma_pass(cmap, d, n, terms, k):
    """Apply the crossing at slots (k-1, k), 1-based k, to a sparse vector.

    ``terms`` maps base-d encoded words of length n to coefficients; the
    braiding acts through ``cmap[pair] = ((out_pair, coeff), ...)`` with
    pairs encoded as (left letter)*d + (right letter).
    """
    shift = d ** (n - 1 - k)
    dd = d * d
    out = {}
    for w, c in terms.items():
        pair = (w // shift) % dd
        base = w - pair * shift
        for kl, s in cmap[pair]:
            t = c * s
            if not t:
                continue
            w2 = base + kl * shift
            cur = out.get(w2)
            if cur is None:
                out[w2] = t
            else:
                t = cur + t
                if t:
                    out[w2] = t
                else:
                    del out[w2]
    return out


def apply_elt(bp, elt, vec, n):
    """Act by a formal sum of braid words on a degree-n sparse vector."""
    if elt.strands != n:
        raise ValueError(f"element on {elt.strands} strands applied in degree {n}")
    d = bp.dim
    cmap = bp.cmap
    total = {}
    for w, c in elt.terms.items():
        cur = vec
        for letter in reversed(w):
            if letter > 0:
                cur = sigma_pass(cmap, d, n, cur, letter)
            else:
                cur = sigma_pass(bp.cmap_inverse(), d, n, cur, -letter)
        vec_add_into(total, cur, None if c.is_one() else c)
    return total


def t1_apply(bp, vec, n):
    """Apply T_(1,n-1), the (1,n-1) coalgebra multiplication, in O(n) passes.

    The inverse-(1,n-1)-shuffle lifts are e, s1, s2 s1, ..., s(n-1)...s1,
    so cumulative crossing passes produce all summands.
    """
    d = bp.dim
    cmap = bp.cmap
    total = dict(vec)
    cur = vec
    for k in range(1, n):
        cur = sigma_pass(cmap, d, n, cur, k)
        vec_add_into(total, cur)
    return total


def symmetrizer_apply(bp, n, vec):
    """Apply the degree-n quantum symmetrizer via the iterated factorization
    S^k = T_(1,k-1) (id (x) S^(k-1)): O(n^2) crossing passes instead of n!
    words."""
    d = bp.dim
    cmap = bp.cmap
    cur = dict(vec)
    for k in range(2, n + 1):
        offset = n - k  # leading slots are inert while S^k builds up
        total = dict(cur)
        run = cur
        for j in range(1, k):
            run = sigma_pass(cmap, d, n, run, offset + j)
            vec_add_into(total, run)
        cur = total
    return cur


def verify_identity(lhs, rhs, suite):
    """Check two operators act identically on every standard basis tensor
    of every braided pair in the suite.  Either side may be a GroupAlgElt
    or anything exposing ``strands`` and ``apply(bp, vec, n)`` (products of
    factors evaluate without expanding the formal sum).  Returns an
    IdentityReport."""
    if lhs.strands != rhs.strands:
        raise ValueError("strand count mismatch")
    n = lhs.strands
    for bp in suite:
        d = bp.dim
        for w in range(d ** n):
            vec = {w: ONE}
            a = lhs.apply(bp, vec, n)
            b = rhs.apply(bp, vec, n)
            if a != b:
                return IdentityReport(False, bp, w, a, b)
    return IdentityReport(True, None, None, None, None)


class IdentityReport:
    __slots__ = ("ok", "pair", "basis_word", "lhs_value", "rhs_value")

    def __init__(self, ok, pair, basis_word, lhs_value, rhs_value):
        self.ok = ok
        self.pair = pair
        self.basis_word = basis_word
        self.lhs_value = lhs_value
        self.rhs_value = rhs_value

    def __bool__(self):
        return self.ok
