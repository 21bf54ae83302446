"""Plane-curve germ analysis: order, Newton polygon, isolatedness, and the
branch number br_0 of g(z, w) at the origin.

The branch count runs the classical Newton-polygon recursion over exact
rationals.  Distinct simple roots of an edge polynomial are counted by
the degree of its squarefree part (no root extraction needed), so germs
whose branches live over extensions of Q, like z^2 + w^2, cost nothing
extra.  Only a *multiple* root forces a coordinate shift: rational roots
shift over Q, irrational ones adjoin a single certified extension
Q[t]/(m); anything beyond that raises ExtensionUnsupported and the
factored-input fallback keeps the computation possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import (
    CommonFactor,
    ExtensionUnsupported,
    KMinusOneError,
    MonomialGerm,
    NotIsolated,
    ZeroPolynomial,
)
from .exact import BiPoly, UniPoly, squarefree_decomposition, uni_gcd
from .fields import NumberField, irreducible_factors

_MAX_DEPTH = 500


@dataclass(frozen=True)
class NewtonEdge:
    """One compact edge of the Newton polygon.

    ``start`` is the endpoint with the larger z-exponent; the primitive
    step along the edge is (-q, +p) for ``direction`` = (q, p).  The edge
    polynomial collects the coefficients on the edge, indexed by lattice
    position from ``start``, so its degree equals the lattice length.
    """

    start: tuple
    end: tuple
    direction: tuple
    lattice_length: int
    edge_polynomial: UniPoly

    @property
    def slope(self) -> Fraction:
        q, p = self.direction
        return Fraction(p, q)


@dataclass(frozen=True)
class BranchReport:
    order: int
    cAn_index: int
    branch_count: int
    isolated: bool


# ---------------------------------------------------------------------------
# basic germ predicates
# ---------------------------------------------------------------------------

def order_at_origin(g: BiPoly) -> int:
    """min(a + b) over the support: the degree of the lowest term."""
    if g.is_zero():
        raise ZeroPolynomial("order of the zero polynomial")
    return g.order()


def is_isolated(g: BiPoly) -> bool:
    """True iff g vanishes at the origin, is nonconstant, and is squarefree,
    i.e. xy + g(z, w) = 0 has an isolated singular point."""
    if g.is_zero() or not g.vanishes_at_origin():
        return False
    return is_squarefree(g)


# ---------------------------------------------------------------------------
# bivariate gcd over Q (primitive PRS in (Q[w])[z])
# ---------------------------------------------------------------------------

def _to_zpoly(g: BiPoly):
    if g.is_zero():
        return []
    dz = g.degree_z()
    cols = [{} for _ in range(dz + 1)]
    for (a, b), c in g.terms.items():
        cols[a][b] = c
    out = []
    for col in cols:
        if col:
            n = max(col)
            out.append(UniPoly(tuple(col.get(i, Fraction(0)) for i in range(n + 1))))
        else:
            out.append(UniPoly())
    while out and out[-1].is_zero():
        out.pop()
    return out


def _from_zpoly(zp) -> BiPoly:
    terms = {}
    for a, u in enumerate(zp):
        for b, c in enumerate(u.coeffs):
            if c:
                terms[(a, b)] = c
    return BiPoly(terms)


def _zp_content(zp) -> UniPoly:
    c = UniPoly()
    for u in zp:
        if not u.is_zero():
            c = uni_gcd(c, u) if not c.is_zero() else u.monic()
        if c.degree == 0:
            break
    return c


def _zp_primitive(zp):
    c = _zp_content(zp)
    if c.degree <= 0:
        # contents are monic, so a constant content is 1
        return list(zp)
    return [u // c for u in zp]


def _zp_prem(a, b):
    """Pseudo-remainder of a by b in (Q[w])[z]; b nonzero."""
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while a and len(a) - 1 >= db:
        lca = a[-1]
        d = len(a) - 1 - db
        a = [c * lcb for c in a]
        for i, bc in enumerate(b):
            a[d + i] = a[d + i] - bc * lca
        while a and a[-1].is_zero():
            a.pop()
    return a


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """gcd in Q[z, w], normalized so the leading w-coefficient of the
    leading z-coefficient is 1."""
    if f.is_zero():
        return _normalize_biv(g)
    if g.is_zero():
        return _normalize_biv(f)
    zf, zg = _to_zpoly(f), _to_zpoly(g)
    content = uni_gcd(_zp_content(zf), _zp_content(zg))
    a, b = _zp_primitive(zf), _zp_primitive(zg)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zp_prem(a, b)
        a, b = b, _zp_primitive(r) if r else []
    a = _zp_primitive(a)
    result = [u * content for u in a]
    return _normalize_biv(_from_zpoly(result))


def _normalize_biv(g: BiPoly) -> BiPoly:
    if g.is_zero():
        return g
    zp = _to_zpoly(g)
    lead = zp[-1].leading
    return g.scale(Fraction(1) / lead)


def is_squarefree(g: BiPoly) -> bool:
    """Squarefree test over Q via gcd(g, g_z, g_w); in characteristic zero
    this is constant exactly for squarefree g."""
    if g.is_zero():
        return False
    if g.total_degree() == 0:
        return True
    d = bipoly_gcd(g, g.derivative_z())
    d = bipoly_gcd(d, g.derivative_w())
    return d.total_degree() == 0


# ---------------------------------------------------------------------------
# Newton polygon
# ---------------------------------------------------------------------------

def _strip_monomial_content(terms):
    """Remove the common factor z^alpha w^beta; returns (alpha, beta, rest)."""
    alpha = min(a for a, _ in terms)
    beta = min(b for _, b in terms)
    if alpha == 0 and beta == 0:
        return 0, 0, terms
    return alpha, beta, {(a - alpha, b - beta): c for (a, b), c in terms.items()}


def _hull_vertices(terms):
    """Vertices of the lower-left boundary of the Newton polygon, ordered
    by decreasing z-exponent.  Assumes min a = min b = 0 over the support."""
    pts = list(terms)
    bmin = min(b for _, b in pts)
    start = (min(a for a, b in pts if b == bmin), bmin)
    amin = min(a for a, _ in pts)
    end = (amin, min(b for a, b in pts if a == amin))
    chain = [start]
    cur = start
    while cur != end:
        best = None
        for pnt in pts:
            if pnt[0] >= cur[0]:
                continue
            if best is None:
                best = pnt
                continue
            lhs = (pnt[1] - cur[1]) * (cur[0] - best[0])
            rhs = (best[1] - cur[1]) * (cur[0] - pnt[0])
            if lhs < rhs or (lhs == rhs and pnt[0] < best[0]):
                best = pnt
        chain.append(best)
        cur = best
    return chain


def _compact_edges(terms):
    """NewtonEdge list from a stripped support (min a = min b = 0)."""
    chain = _hull_vertices(terms)
    zero = next(iter(terms.values())) * 0
    edges = []
    for v, u in zip(chain, chain[1:]):
        da, db = v[0] - u[0], u[1] - v[1]
        ell = gcd(da, db)
        q, p = da // ell, db // ell
        coeffs = [terms.get((v[0] - j * q, v[1] + j * p), zero) for j in range(ell + 1)]
        edges.append(NewtonEdge(v, u, (q, p), ell, UniPoly(coeffs)))
    return edges


def newton_polygon(g: BiPoly):
    """Compact edges of the Newton polygon after stripping monomial content.

    Raises MonomialGerm when g is a pure monomial (no compact edges); that
    case is handled by branch_count directly through the content count.
    """
    if g.is_zero():
        raise ZeroPolynomial("newton polygon of the zero polynomial")
    if not g.vanishes_at_origin():
        raise NotIsolated("germ must vanish at the origin")
    if len(g.terms) == 1:
        raise MonomialGerm("a pure monomial has no compact Newton polygon edges")
    _, _, stripped = _strip_monomial_content(g.terms)
    return _compact_edges(stripped)


# ---------------------------------------------------------------------------
# branch counting
# ---------------------------------------------------------------------------

def _bezout_chart(q: int, p: int):
    """Nonnegative (alpha, beta) with p*beta - q*alpha = 1."""
    # extended gcd: x*p + y*q = 1
    old_r, r = p, q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    beta, alpha = old_x, -old_y
    while alpha < 0 or beta < 0:
        alpha += p
        beta += q
    return alpha, beta


def _lift_terms(terms, field: NumberField):
    return {k: field.from_rational(c) for k, c in terms.items()}


def _recursion_germ(terms, edge: NewtonEdge, gamma):
    """Shifted strict transform at the exceptional point v = gamma of the
    toric chart z = u^p v^alpha, w = u^q v^beta attached to the edge."""
    q, p = edge.direction
    a0, b0 = edge.start
    n_min = p * a0 + q * b0
    alpha, beta = _bezout_chart(q, p)

    chart = {}
    for (a, b), c in terms.items():
        key = (alpha * a + beta * b, p * a + q * b - n_min)
        chart[key] = chart.get(key, c * 0) + c
    chart = {k: c for k, c in chart.items() if c}
    # the exceptional content v^m is supported on v = 0, away from gamma != 0
    vmin = min(ve for ve, _ in chart)
    if vmin:
        chart = {(ve - vmin, ue): c for (ve, ue), c in chart.items()}

    gamma_pows = [gamma * 0 + 1]
    max_ve = max(ve for ve, _ in chart)
    for _ in range(max_ve):
        gamma_pows.append(gamma_pows[-1] * gamma)

    out = {}
    for (ve, ue), c in chart.items():
        for i in range(ve + 1):
            key = (i, ue)
            add = c * comb(ve, i) * gamma_pows[ve - i]
            s = out.get(key, add * 0) + add
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _roots_of_multiple_factor(fac: UniPoly, field):
    """Split a squarefree factor carrying multiple roots into usable roots:
    yields (gamma, conjugate_count, field_of_gamma).  Conjugate roots have
    conjugate branch structures, so one representative is recursed and the
    result multiplied by the factor degree."""
    if field is None:
        out = []
        for irr, d in irreducible_factors(fac):
            if d == 1:
                out.append((-irr.coeffs[0], 1, None))
            else:
                ext = NumberField(irr)
                out.append((ext.generator, d, ext))
        return out
    # already over an extension: only roots inside it are reachable
    if all(c.is_rational() for c in fac.coeffs):
        rational_fac = UniPoly(tuple(c.as_rational() for c in fac.coeffs))
        out = []
        leftover = rational_fac.monic()
        for irr, d in irreducible_factors(rational_fac):
            if d == 1:
                out.append((field.from_rational(-irr.coeffs[0]), 1, field))
                leftover = leftover // irr
        if leftover.degree > 0:
            raise ExtensionUnsupported(
                "a multiple root needs a second field extension; "
                "re-run with --factors supplying the irreducible factors")
        return out
    if fac.degree == 1:
        return [(-fac.coeffs[0] / fac.coeffs[1], 1, field)]
    raise ExtensionUnsupported(
        "a multiple root needs a second field extension; "
        "re-run with --factors supplying the irreducible factors")


def _branch_total(terms, field, depth: int) -> int:
    if depth > _MAX_DEPTH:
        raise KMinusOneError("branch recursion exceeded the depth bound; "
                             "this should not happen for squarefree germs")
    alpha, beta, terms = _strip_monomial_content(terms)
    if alpha > 1 or beta > 1:
        raise NotIsolated("germ has a repeated factor")
    count = alpha + beta
    if (0, 0) in terms:
        return count
    for edge in _compact_edges(terms):
        for fac, mult in squarefree_decomposition(edge.edge_polynomial):
            if mult == 1:
                # each distinct simple root is one branch, over any field
                count += fac.degree
                continue
            for gamma, copies, gfield in _roots_of_multiple_factor(fac, field):
                sub = terms if gfield is field else _lift_terms(terms, gfield)
                shifted = _recursion_germ(sub, edge, gamma)
                count += copies * _branch_total(shifted, gfield, depth + 1)
    return count


def branch_count(g: BiPoly) -> BranchReport:
    """Branch number of the isolated germ g at the origin, together with
    the order and the compound-A index of xy + g(z, w)."""
    if g.is_zero():
        raise ZeroPolynomial("branch count of the zero polynomial")
    if not is_isolated(g):
        raise NotIsolated(
            "branch counting requires an isolated germ: nonconstant, "
            "vanishing at the origin, with no multiple factors")
    order = g.order()
    total = _branch_total(g.terms, None, 0)
    return BranchReport(order=order, cAn_index=order - 1, branch_count=total,
                        isolated=True)


def branch_count_factored(factors) -> BranchReport:
    """Branch number of a product of pairwise coprime isolated germs;
    fallback input mode for germs whose recursion would need an
    unsupported field extension."""
    factors = list(factors)
    if not factors:
        raise ZeroPolynomial("empty factor list")
    for i, f in enumerate(factors):
        if f.is_zero():
            raise ZeroPolynomial(f"factor {i + 1} is zero")
        if not is_isolated(f):
            raise NotIsolated(f"factor {i + 1} is not an isolated germ")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if bipoly_gcd(factors[i], factors[j]).total_degree() > 0:
                raise CommonFactor(
                    f"factors {i + 1} and {j + 1} share a nonunit common factor")
    order = 0
    total = 0
    for f in factors:
        rep = branch_count(f)
        order += rep.order
        total += rep.branch_count
    return BranchReport(order=order, cAn_index=order - 1, branch_count=total,
                        isolated=True)
