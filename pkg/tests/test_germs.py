"""Newton polygon and branch counting oracles.

The independent oracles used here:
  * binomial rule: z^a - c w^b has gcd(a, b) branches (count the
    parametrizations of the quasi-homogeneous germ);
  * additivity over coprime products;
  * hand-computed Newton polygons and recursions frozen as constants.
"""

import random
from fractions import Fraction
from math import gcd

import pytest

from kminusone.errors import (
    CommonFactor,
    ExtensionUnsupported,
    MonomialGerm,
    NotIsolated,
    ZeroPolynomial,
)
from kminusone.exact import BiPoly, UniPoly
from kminusone.fields import NumberField
from kminusone.germs import (
    _roots_of_multiple_factor,
    bipoly_gcd,
    branch_count,
    branch_count_factored,
    is_isolated,
    is_squarefree,
    newton_polygon,
    order_at_origin,
)
from kminusone.parsing import parse_polynomial as poly


class TestOrder:
    def test_ade_rows(self):
        assert order_at_origin(poly("z^2 + w^3")) == 2
        assert order_at_origin(poly("z*w")) == 2
        assert order_at_origin(poly("z^3 + z*w^3")) == 3

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            order_at_origin(BiPoly.zero())


class TestIsIsolated:
    def test_basic(self):
        assert is_isolated(poly("z^2 + w^2"))
        assert not is_isolated(poly("z^2"))          # repeated factor
        assert not is_isolated(poly("z + 1"))        # does not vanish
        assert not is_isolated(BiPoly.zero())

    def test_squarefree_with_axis_factor(self):
        assert is_isolated(poly("z*w"))
        assert is_isolated(poly("w*(z^2 + w^2)"))
        assert not is_isolated(poly("w^2*(z + w)"))

    def test_is_squarefree_catches_mixed_squares(self):
        assert not is_squarefree(poly("(z - w)^2 * (z + w)"))
        assert is_squarefree(poly("(z - w) * (z + w)"))


class TestNewtonPolygon:
    def test_single_edge_of_a1(self):
        edges = newton_polygon(poly("z^2 + w^2"))
        assert len(edges) == 1
        e = edges[0]
        assert (e.start, e.end) == ((2, 0), (0, 2))
        assert e.direction == (1, 1)
        assert e.lattice_length == 2
        assert e.edge_polynomial == UniPoly.from_int_coeffs([1, 0, 1])  # t^2 + 1

    def test_content_stripped_d4(self):
        # z^2 w + w^3 = w (z^2 + w^2): hull of the stripped part
        edges = newton_polygon(poly("z^2*w + w^3"))
        assert len(edges) == 1
        assert edges[0].edge_polynomial == UniPoly.from_int_coeffs([1, 0, 1])

    def test_coprime_exponents_have_lattice_length_one(self):
        edges = newton_polygon(poly("z^3 + w^5"))
        assert len(edges) == 1
        e = edges[0]
        assert e.lattice_length == 1
        assert e.direction == (3, 5)
        assert e.edge_polynomial == UniPoly.from_int_coeffs([1, 1])

    def test_two_edges(self):
        edges = newton_polygon(poly("(z^2 + w^2)*(z^2 + w^3)"))
        assert [e.lattice_length for e in edges] == [2, 1]

    def test_monomial_rejected(self):
        with pytest.raises(MonomialGerm):
            newton_polygon(poly("z^2*w"))

    def test_edge_degree_equals_lattice_length(self):
        rng = random.Random(11)
        for _ in range(50):
            terms = {}
            for _ in range(rng.randint(2, 6)):
                terms[(rng.randint(0, 6), rng.randint(0, 6))] = Fraction(
                    rng.choice([-3, -2, -1, 1, 2, 3]))
            g = BiPoly(terms)
            if g.is_zero() or not g.vanishes_at_origin() or len(g.terms) < 2:
                continue
            for e in newton_polygon(g):
                assert e.edge_polynomial.degree == e.lattice_length


class TestBranchCount:
    def test_ade_table_branches(self):
        for k in (1, 2, 3):
            assert branch_count(poly(f"z^2 + w^{2 * k}")).branch_count == 2
            assert branch_count(poly(f"z^2 + w^{2 * k + 1}")).branch_count == 1
        for k in (2, 3):
            assert branch_count(poly(f"z^2*w + w^{2 * k - 1}")).branch_count == 3
            assert branch_count(poly(f"z^2*w + w^{2 * k}")).branch_count == 2
        assert branch_count(poly("z^3 + z*w^3")).branch_count == 2
        assert branch_count(poly("z^3 + w^4")).branch_count == 1
        assert branch_count(poly("z^3 + w^5")).branch_count == 1

    def test_node(self):
        rep = branch_count(poly("z*w"))
        assert (rep.order, rep.cAn_index, rep.branch_count) == (2, 1, 2)

    def test_rational_double_root_recursion(self):
        # (z - w^2)(z - w^2 - w^3): double root shifts to z (z - w^3)
        rep = branch_count(poly("(z - w^2)*(z - w^2 - w^3)"))
        assert rep.branch_count == 2

    def test_binomial_gcd_oracle(self):
        for a in range(1, 7):
            for b in range(1, 7):
                for c in (1, 2, Fraction(3, 2)):
                    g = poly(f"z^{a}") - BiPoly.monomial(0, b, Fraction(c))
                    if not is_isolated(g):
                        assert gcd(a, b) > 1  # only squares fail squarefreeness
                        continue
                    assert branch_count(g).branch_count == gcd(a, b), (a, b, c)

    def test_tangent_lines_on_one_edge(self):
        assert branch_count(poly("(z - w)*(z + w)*(z - 2*w)")).branch_count == 3

    def test_tacnode_and_ramphoid_cusp(self):
        assert branch_count(poly("w^2 - z^4")).branch_count == 2
        # (w - z^2)^2 - z^5 is irreducible with one branch
        assert branch_count(poly("(w - z^2)^2 - z^5")).branch_count == 1

    def test_irrational_double_root_single_extension(self):
        # (z^2 - 2w^2)^2 + z w^4: one branch along each of z = +-sqrt(2) w
        assert branch_count(poly("(z^2 - 2*w^2)^2 + z*w^4")).branch_count == 2

    def test_mixed_multiplicities_on_one_edge(self):
        # (z-w)^2 (z-2w) + w^4: the simple root is one smooth branch, the
        # double root recurses to a single ramified branch
        assert branch_count(poly("(z - w)^2*(z - 2*w) + w^4")).branch_count == 2

    def test_extension_recursion_splits_conjugate_tangents(self):
        # both factors are tangent to z = +-sqrt(2) w; the recursion over
        # Q(sqrt 2) must separate their strict transforms
        g = poly("(z^2 - 2*w^2)*(z^2 - 2*w^2 - w^3)")
        assert branch_count(g).branch_count == 4
        # and with matching first corrections it goes one level deeper
        g = poly("(z^2 - 2*w^2 - w^3)*(z^2 - 2*w^2 - w^3 - w^4)")
        assert branch_count(g).branch_count == 4

    def test_deep_rational_recursion(self):
        # z = w^2 + w^3 +- w^(7/2): ramified, one branch
        assert branch_count(poly("(z - w^2 - w^3)^2 - w^7")).branch_count == 1
        # z = w^2 + w^3 +- w^4: two branches
        assert branch_count(poly("(z - w^2 - w^3)^2 - w^8")).branch_count == 2

    def test_quartic_extension(self):
        # hand recursion: two smooth branches above each of the four
        # tangent directions z = 2^(1/4) i^k w
        assert branch_count(poly("(z^4 - 2*w^4)^2 + z*w^11")).branch_count == 8

    def test_unsupported_degree_seven_extension(self):
        with pytest.raises(ExtensionUnsupported):
            branch_count(poly("(z^7 - 2*w^7)^2 + z^3*w^12"))

    def test_error_message_mentions_factors_flag(self):
        with pytest.raises(ExtensionUnsupported, match="--factors"):
            branch_count(poly("(z^7 - 2*w^7)^2 + z^3*w^12"))

    def test_not_isolated_rejected(self):
        with pytest.raises(NotIsolated):
            branch_count(poly("z^2"))
        with pytest.raises(NotIsolated):
            branch_count(poly("z + 1"))

    def test_cAn_index_is_order_minus_one(self):
        for text in ("z*w", "z^2 + w^5", "z^2*w + w^3", "z^3 + z*w^3"):
            rep = branch_count(poly(text))
            assert rep.cAn_index == rep.order - 1

    def test_branch_bound_by_lattice_length(self):
        # branch count <= total lattice length + stripped content exponents
        germs = ["z^2 + w^2", "z^2*w + w^3", "(z - w)*(z + w)*(z - 2*w)",
                 "z*w", "(z - w^2)*(z - w^2 - w^3)", "z^3 + z*w^3"]
        for text in germs:
            g = poly(text)
            alpha = min(a for a, _ in g.terms)
            beta = min(b for _, b in g.terms)
            stripped = BiPoly({(a - alpha, b - beta): c
                               for (a, b), c in g.terms.items()})
            total = alpha + beta
            if (0, 0) not in stripped.terms:
                total += sum(e.lattice_length for e in newton_polygon(stripped))
            assert branch_count(g).branch_count <= total


CATALOG_GERMS = [
    "z^2 + w^2", "z^2 + w^3", "z^2 + w^4", "z^2 + w^5", "z^2 + w^6",
    "z^2 + w^7", "z^2*w + w^3", "z^2*w + w^4", "z^2*w + w^5",
    "z^3 + w^4", "z^3 + z*w^3", "z^3 + w^5",
    "z", "w", "z - w", "z + w", "z - 2*w", "z - w^2",
]


class TestAdditivity:
    def test_random_coprime_products(self):
        rng = random.Random(99)
        done = 0
        while done < 60:
            f = poly(rng.choice(CATALOG_GERMS))
            g = poly(rng.choice(CATALOG_GERMS))
            if bipoly_gcd(f, g).total_degree() > 0:
                continue
            prod = f * g
            assert is_isolated(prod)
            assert branch_count(prod).branch_count == \
                branch_count(f).branch_count + branch_count(g).branch_count
            done += 1

    def test_random_linear_form_products(self):
        rng = random.Random(123)
        for _ in range(30):
            slopes = rng.sample(range(-6, 7), rng.randint(2, 4))
            g = BiPoly.constant(Fraction(1))
            for s in slopes:
                g = g * (poly("z") - BiPoly.monomial(0, 1, Fraction(s)))
            assert branch_count(g).branch_count == len(slopes)


class TestFactoredInput:
    def test_d4_as_product(self):
        rep = branch_count_factored([poly("w"), poly("z^2 + w^2")])
        assert rep.branch_count == 3
        assert rep.order == 3

    def test_single_smooth_branch(self):
        assert branch_count_factored([poly("z")]).branch_count == 1

    def test_three_lines(self):
        rep = branch_count_factored([poly("z - w"), poly("z + w"), poly("z - 2*w")])
        assert rep.branch_count == 3

    def test_common_factor_rejected(self):
        with pytest.raises(CommonFactor):
            branch_count_factored([poly("z*w"), poly("w*(z + w)")])

    def test_non_isolated_factor_rejected(self):
        with pytest.raises(NotIsolated):
            branch_count_factored([poly("z^2")])

    def test_unsupported_germ_recovered_by_factoring(self):
        f1 = poly("z^7 - 2*w^7")
        rep = branch_count_factored([f1, poly("w")])
        assert rep.branch_count == 7 + 1


class TestExtensionTower:
    def test_second_extension_rejected(self):
        k = NumberField(UniPoly.from_int_coeffs([-2, 0, 1]))  # Q(sqrt 2)
        # t^2 - theta: a multiple-root factor with irrational coefficients
        fac = UniPoly((-k.generator, k.zero, k.one))
        with pytest.raises(ExtensionUnsupported):
            _roots_of_multiple_factor(fac, k)

    def test_rational_factor_over_extension_needs_no_new_field(self):
        k = NumberField(UniPoly.from_int_coeffs([-2, 0, 1]))
        fac = UniPoly((k.from_rational(-1), k.one))  # t - 1
        roots = _roots_of_multiple_factor(fac, k)
        assert len(roots) == 1
        gamma, copies, field = roots[0]
        assert copies == 1 and field is k and gamma == k.one

    def test_linear_factor_with_irrational_root_stays_in_field(self):
        k = NumberField(UniPoly.from_int_coeffs([-2, 0, 1]))
        fac = UniPoly((-k.generator, k.one))  # t - sqrt(2)
        ((gamma, copies, field),) = _roots_of_multiple_factor(fac, k)
        assert copies == 1 and field is k and gamma == k.generator


class TestBivariateGcd:
    def test_detects_shared_irreducible_factor(self):
        f = poly("(z + w)*(z^2 + w^3)")
        g = poly("(z + w)*w")
        d = bipoly_gcd(f, g)
        assert d.total_degree() == 1
        assert d == poly("z + w")

    def test_coprime_inputs(self):
        assert bipoly_gcd(poly("z^2 + w^3"), poly("z^2 + w^2")).total_degree() == 0

    def test_pure_w_content_factor(self):
        d = bipoly_gcd(poly("w^2*(z + 1)"), poly("w*(z - 1)"))
        assert d == poly("w")

    def test_gcd_with_zero(self):
        f = poly("z + w")
        assert bipoly_gcd(f, BiPoly.zero()) == f
