#include <doctest.h>

#include "loopcoh/quotient_ring.hpp"
#include "loopcoh/series.hpp"

using namespace loopcoh;

namespace {

// F[x1,x2]/(Q_r, Q_{r+1}) built by hand; the geodesy module has the real
// constructor, this keeps the ring tests self-contained.
template <typename S>
QuotientRing<S> q_ring(int r, FieldTag field)
{
    VariableList vars{{"x1", 2, false}, {"x2", 2, false}};
    auto Q = [&](int k) {
        Poly<S> q;
        for (int i = 0; i <= k; ++i) {
            Monomial m{i, k - i};
            q.add_term(scalar_from<S>(1, field), m);
        }
        return q;
    };
    return QuotientRing<S>(vars, {Q(r), Q(r + 1)}, field);
}

QuotientRing<Fp> trunc_ring(int r, long long p)
{
    FieldTag f = FieldTag::prime_field(p);
    VariableList vars{{"x", 2, false}};
    Poly<Fp> rel = Poly<Fp>::variable(Fp(1, p), 1, 0, r + 1);
    return QuotientRing<Fp>(vars, {rel}, f);
}

}  // namespace

TEST_CASE("degree_basis of truncated polynomial ring")
{
    auto ring = trunc_ring(2, 5);
    auto b4 = ring.degree_basis(4);
    REQUIRE(b4.size() == 1);
    CHECK(b4[0] == Monomial{2});
    CHECK(ring.dim(6) == 0);  // x^3 = 0
    CHECK(ring.dim(0) == 1);
    CHECK(ring.dim(3) == 0);  // odd degree empty
    CHECK_THROWS_AS(ring.degree_basis(-1), std::invalid_argument);
}

TEST_CASE("degree_basis of F_5[x1,x2]/(Q_2,Q_3) in degree 4")
{
    auto ring = q_ring<Fp>(2, FieldTag::prime_field(5));
    // dimension from the closed-form series (1-t^4)(1-t^6)/(1-t^2)^2
    auto series = presentation_series(ring.shape()).expand(8);
    CHECK(series.coeff(4) == 2);
    CHECK(ring.dim(4) == 2);
}

TEST_CASE("degree_basis matches the presentation series in every degree")
{
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int r : {1, 2, 3}) {
            auto ring = q_ring<Fp>(r, FieldTag::prime_field(p));
            int cutoff = 4 * r + 8;
            auto closed = presentation_series(ring.shape()).expand(cutoff);
            auto counted = ring_series_by_basis(ring, cutoff);
            CHECK(closed == counted);
        }
    }
    auto rq = q_ring<Rational>(2, FieldTag::rationals());
    auto closed = presentation_series(rq.shape()).expand(12);
    CHECK(closed == ring_series_by_basis(rq, 12));
}

TEST_CASE("ideal membership in (Q_2, Q_3)")
{
    auto ring = q_ring<Fp>(2, FieldTag::prime_field(5));
    Fp one(1, 5);

    Poly<Fp> x1_cubed = Poly<Fp>::term(one, Monomial{3, 0});
    CHECK(ring.ideal_membership(x1_cubed));

    Poly<Fp> q4;
    for (int i = 0; i <= 4; ++i)
        q4.add_term(one, Monomial{i, 4 - i});
    CHECK(ring.ideal_membership(q4));

    Poly<Fp> x1x1x2 = Poly<Fp>::term(one, Monomial{2, 1});
    CHECK_FALSE(ring.ideal_membership(x1x1x2));

    // invariance under nonzero scalar
    CHECK(ring.ideal_membership(x1_cubed.scaled(Fp(3, 5))));
    CHECK_FALSE(ring.ideal_membership(x1x1x2.scaled(Fp(4, 5))));

    Poly<Fp> inhom = x1_cubed + Poly<Fp>::term(one, Monomial{1, 0});
    CHECK_THROWS_WITH_AS(ring.ideal_membership(inhom),
                         "ideal_membership: inhomogeneous polynomial",
                         std::invalid_argument);
}

TEST_CASE("coset multiplication")
{
    FieldTag f3 = FieldTag::prime_field(3);
    VariableList vars{{"x", 2, false}, {"s", 3, true}};
    Poly<Fp> xrel = Poly<Fp>::variable(Fp(1, 3), 2, 0, 3);
    QuotientRing<Fp> ring(vars, {xrel}, f3);

    Poly<Fp> one = ring.unit();
    Poly<Fp> s = ring.var(1);
    CHECK(ring.multiply(one, s) == s);
    CHECK(ring.multiply(s, s).is_zero());  // exterior square
    CHECK(ring.multiply(ring.var(0, 2), ring.var(0)).is_zero());  // x^3 = 0

    // Q-ring with r=1: x1*x1 = -x2*x1 as cosets since x1^2 + x1 x2 = x1 Q_1
    auto qr = q_ring<Fp>(1, FieldTag::prime_field(5));
    Poly<Fp> x1 = qr.var(0), x2 = qr.var(1);
    CHECK(qr.multiply(x1, x1) == qr.reduce(-x1.multiply(x2, qr.variables())));
}

TEST_CASE("multiplication is associative and graded-commutative on basis cosets")
{
    FieldTag f3 = FieldTag::prime_field(3);
    VariableList vars{{"x", 2, false}, {"s", 3, true}, {"t", 5, true}};
    Poly<Fp> xrel = Poly<Fp>::variable(Fp(1, 3), 3, 0, 3);
    QuotientRing<Fp> ring(vars, {xrel}, f3);

    std::vector<Poly<Fp>> cosets;
    std::vector<int> degs;
    for (int d = 0; d <= 10; ++d)
        for (const Monomial& m : ring.degree_basis(d)) {
            cosets.push_back(Poly<Fp>::term(Fp(1, 3), m));
            degs.push_back(d);
        }

    for (std::size_t a = 0; a < cosets.size(); ++a)
        for (std::size_t b = 0; b < cosets.size(); ++b) {
            // graded commutativity: ab = (-1)^{|a||b|} ba
            Poly<Fp> ab = ring.multiply(cosets[a], cosets[b]);
            Poly<Fp> ba = ring.multiply(cosets[b], cosets[a]);
            if (degs[a] % 2 != 0 && degs[b] % 2 != 0)
                CHECK(ab == -ba);
            else
                CHECK(ab == ba);
            for (std::size_t c = 0; c < cosets.size(); ++c) {
                Poly<Fp> left = ring.multiply(ab, cosets[c]);
                Poly<Fp> right = ring.multiply(cosets[a], ring.multiply(cosets[b], cosets[c]));
                CHECK(left == right);
            }
        }
}

TEST_CASE("odd-degree generators must be exterior")
{
    VariableList bad{{"v", 3, false}};
    CHECK_THROWS_AS(QuotientRing<Fp>(bad, {}, FieldTag::prime_field(3)),
                    std::invalid_argument);
}
