"""Exact arithmetic core: rationals, polynomials, integer matrices with
Smith normal form, and finitely generated abelian groups.

Everything here is exact (arbitrary-precision integers and fractions);
no floating point anywhere.  All values are immutable after construction
and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroPolynomial

# Exact rational scalar: always reduced, denominator > 0.
Rational = Fraction


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial over a field.

    Coefficients are stored low degree first; the zero polynomial has an
    empty coefficient tuple.  Coefficient elements only need field
    arithmetic through operators (+, -, *, /), so both Fraction and
    number-field elements work.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def from_int_coeffs(cls, coeffs) -> "UniPoly":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [self.coeffs[0] * other.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        return UniPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _one_like(self, self)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_degree(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] * 0
        return UniPoly((zero,) * k + self.coeffs)

    def divmod(self, other: "UniPoly"):
        """Exact field division with remainder."""
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        if self.degree < other.degree:
            return UniPoly(), self
        rem = list(self.coeffs)
        lead = other.leading
        dq = self.degree - other.degree
        quot = [self.coeffs[0] * 0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[other.degree + k]
            if not c:
                continue
            q = c / lead
            quot[k] = q
            for i, b in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - q * b
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm.

    Remainders are renormalized monic at each step to keep rational
    coefficient growth down."""
    while not b.is_zero():
        r = a % b
        a, b = b, r.monic()
    return a.monic() if not a.is_zero() else a


def uni_ext_gcd(a: UniPoly, b: UniPoly):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = _one_like(a, b), UniPoly()
    t0, t1 = UniPoly(), _one_like(a, b)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading
    inv = (r0.coeffs[0] * 0 + 1) / lead
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def _one_like(a: UniPoly, b: UniPoly) -> UniPoly:
    for p in (a, b):
        if p.coeffs:
            c = p.coeffs[0]
            return UniPoly.const(c * 0 + 1)
    return UniPoly.const(Fraction(1))


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), monic-normalized.

    The degree of the result equals the number of distinct roots of p over
    the algebraic closure (characteristic zero).
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree_part of the zero polynomial")
    d = p.derivative()
    if d.is_zero():
        return p.monic()
    g = uni_gcd(p, d)
    return (p // g).monic()


def squarefree_decomposition(p: UniPoly):
    """Yun's algorithm: returns [(a_1, 1), (a_2, 2), ...] with
    p = lc * prod a_k^k, the a_k monic, squarefree and pairwise coprime.
    Factors with a_k constant are omitted."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree <= 0:
        return []
    dp = p.derivative()
    g = uni_gcd(p, dp)
    if g.degree <= 0:
        return [(p, 1)]
    out = []
    c = p // g
    d = dp // g - c.derivative()
    k = 1
    while c.degree > 0:
        a = uni_gcd(c, d)
        if a.degree > 0:
            out.append((a, k))
        c_next = c // a
        d = d // a - c_next.derivative()
        c = c_next
        k += 1
    return out


# ---------------------------------------------------------------------------
# bivariate polynomials g(z, w)
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial: a finite map (z-exp, w-exp) -> coefficient.

    No zero coefficients are stored.  Coefficients need only field
    arithmetic, so germs can live over Q or over a simple extension of Q.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    t[(int(a), int(b))] = c
        self.terms = t

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=Fraction(1)) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def var_z(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def var_w(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def support(self):
        return set(self.terms)

    def coefficient(self, a: int, b: int):
        return self.terms.get((a, b), Fraction(0))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            elif k in t:
                del t[k]
        out = BiPoly()
        out.terms = t
        return out

    def __neg__(self) -> "BiPoly":
        out = BiPoly()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        t = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = t.get(k, 0) + c1 * c2
                if s:
                    t[k] = s
                elif k in t:
                    del t[k]
        out = BiPoly()
        out.terms = t
        return out

    def scale(self, c) -> "BiPoly":
        if not c:
            return BiPoly()
        out = BiPoly()
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def order(self) -> int:
        """Order at the origin: min(a + b) over the support."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(a + b for a, b in self.terms)

    def vanishes_at_origin(self) -> bool:
        return bool(self.terms) and (0, 0) not in self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(a + b for a, b in self.terms)

    def degree_z(self) -> int:
        if not self.terms:
            return -1
        return max(a for a, _ in self.terms)

    def degree_w(self) -> int:
        if not self.terms:
            return -1
        return max(b for _, b in self.terms)

    def derivative_z(self) -> "BiPoly":
        out = BiPoly()
        out.terms = {(a - 1, b): c * a for (a, b), c in self.terms.items() if a > 0}
        return out

    def derivative_w(self) -> "BiPoly":
        out = BiPoly()
        out.terms = {(a, b - 1): c * b for (a, b), c in self.terms.items() if b > 0}
        return out

    def __repr__(self):
        return f"BiPoly({self.terms!r})"


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major storage."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag) -> "IntMatrix":
        diag = list(diag)
        n = len(diag)
        return cls(n, n, tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not compose")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(sum(a[i][k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def is_diagonal(self) -> bool:
        return all(self.entry(i, j) == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal_entries(self):
        return [self.entry(i, i) for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        d, _, _ = smith_normal_form(self)
        return sum(1 for x in d.diagonal_entries() if x != 0)


def smith_normal_form(m: IntMatrix):
    """Return (D, U, V) with U*M*V = D, D diagonal with d1 | d2 | ...,
    and U, V unimodular.

    Classical elimination with pivot-size control: the smallest nonzero
    entry of the remaining block is swapped in as the pivot, which keeps
    coefficient growth tame at the matrix sizes this package meets.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        ad, asrc = a[dst], a[src]
        for j in range(cols):
            ad[j] += q * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(rows):
            ud[j] += q * usrc[j]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            # select the smallest nonzero entry of the remaining block
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best, pivot = x, (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain d1 | d2 | ...
            fix = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            add_row(t, fix, 1)

    d = IntMatrix.from_rows(a) if rows else IntMatrix(0, cols, ())
    return d, IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()), \
        IntMatrix.from_rows(v) if cols else IntMatrix(0, 0, ())


# ---------------------------------------------------------------------------
# finitely generated abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group as free rank plus invariant factors
    d1 | d2 | ..., each >= 2.  Canonical, so equality is structural."""

    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        facs = tuple(int(f) for f in self.invariant_factors)
        for f in facs:
            if f < 2:
                raise ValueError("invariant factors must be >= 2")
        for x, y in zip(facs, facs[1:]):
            if y % x:
                raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "invariant_factors", facs)

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FinAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        if n == 0:
            return cls.free(1)
        if n == 1:
            return cls.trivial()
        return cls(0, (abs(n),))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def torsion_order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def direct_sum(self, other: "FinAbGroup") -> "FinAbGroup":
        facs = self.invariant_factors + other.invariant_factors
        if not facs:
            return FinAbGroup(self.free_rank + other.free_rank, ())
        # renormalize the concatenated factors through SNF of a diagonal matrix
        d, _, _ = smith_normal_form(IntMatrix.diagonal(facs))
        chained = tuple(x for x in d.diagonal_entries() if x >= 2)
        return FinAbGroup(self.free_rank + other.free_rank, chained)

    def repeated(self, copies: int) -> "FinAbGroup":
        if copies < 0:
            raise ValueError("negative number of copies")
        out = FinAbGroup.trivial()
        for _ in range(copies):
            out = out.direct_sum(self)
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{f}" for f in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> FinAbGroup:
    """Z^rows / image(M) for M viewed as a map Z^cols -> Z^rows."""
    d, _, _ = smith_normal_form(m)
    diag = d.diagonal_entries()
    nonzero = [abs(x) for x in diag if x != 0]
    return FinAbGroup(m.rows - len(nonzero), tuple(x for x in nonzero if x >= 2))
