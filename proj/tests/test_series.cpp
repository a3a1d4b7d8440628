#include <doctest.h>

#include "loopcoh/series.hpp"

using namespace loopcoh;

TEST_CASE("expand 1/(1-t)")
{
    RationalSeries rs;
    rs.over_one_minus(1);
    auto s = rs.expand(3);
    CHECK(s.render() == "1 + 1 t + 1 t^2 + 1 t^3");
}

TEST_CASE("expand (1-t^4)/((1-t)(1-t^2)(1-t^4))")
{
    RationalSeries rs;
    rs.times_one_minus(4).over_one_minus(1).over_one_minus(2).over_one_minus(4);
    auto s = rs.expand(5);
    // cancel (1-t^4) and expand 1/((1-t)(1-t^2)) by convolution
    auto oracle = PowerSeries::geometric(1, 5) * PowerSeries::geometric(2, 5);
    CHECK(s == oracle);
    CHECK(s.render_coefficients() == "1 1 2 2 3 3");
}

TEST_CASE("zero numerator expands to zero")
{
    RationalSeries rs({BigInt(0)}, {{2, 1}});
    CHECK(rs.expand(6).is_zero());
}

TEST_CASE("expand distributes over products of rational forms")
{
    RationalSeries a;
    a.times_one_minus(6).over_one_minus(2).over_one_minus(2);
    RationalSeries b;
    b.times_one_plus(3).over_one_minus(4);
    auto lhs = (a * b).expand(20);
    auto rhs = a.expand(20) * b.expand(20);
    CHECK(lhs == rhs);
}

TEST_CASE("denominator cancellation against identical numerator factor")
{
    RationalSeries rs;
    rs.over_one_minus(4);
    rs.times_one_minus(4);  // cancels, leaving 1
    CHECK(rs.expand(9) == PowerSeries::one(9));
}

TEST_CASE("odd and even parts")
{
    PowerSeries p(2);
    p.coeff(0) = 1;
    p.coeff(1) = 1;
    p.coeff(2) = 2;
    CHECK(p.even_part().render() == "1 + 2 t^2");
    CHECK(p.odd_part().render() == "1 t");
    CHECK(p.even_part() + p.odd_part() == p);

    PowerSeries z(4);
    CHECK(z.even_part().is_zero());
    CHECK(z.odd_part().is_zero());
}

TEST_CASE("Morse E1 series for (r,p)=(1,2) has odd part = t * even part")
{
    // (1 - t^{2r+2}) / ((1-t)(1-t^2)(1-t^{2pr})) with r=1, p=2
    RationalSeries rs;
    rs.times_one_minus(4).over_one_minus(1).over_one_minus(2).over_one_minus(4);
    auto s = rs.expand(5);
    CHECK(s.odd_part() == s.even_part().shifted(1));
}

TEST_CASE("index set series IF(2,3,2) and IF(2,2,2)")
{
    TruncSpaceParams p232(2, 3, 2);
    auto s = series_of_index_set(make_IF(p232), 12);
    PowerSeries expect(12);
    expect.coeff(4) = expect.coeff(8) = expect.coeff(12) = 1;  // IF(2,3,2) = 4N
    CHECK(s == expect);

    TruncSpaceParams p222(2, 2, 2);
    auto s2 = series_of_index_set(make_IF(p222), 14);
    PowerSeries expect2(14);
    expect2.coeff(4) = expect2.coeff(6) = expect2.coeff(12) = expect2.coeff(14) = 1;
    CHECK(s2 == expect2);

    // IT with an empty range
    CHECK(series_of_index_set(make_IT(p232), 0).is_zero());
}

TEST_CASE("index set series stay 0/1 valued")
{
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int r : {1, 2, 3, 4}) {
            TruncSpaceParams par(r, p, 2);
            int cutoff = 6 * par.rho() * static_cast<int>(p);
            for (auto kind : {IndexSetKind::IF, IndexSetKind::IT}) {
                auto s = series_of_index_set({kind, par}, cutoff);
                for (int i = 0; i <= cutoff; ++i)
                    CHECK((s.coeff(i) == 0 || s.coeff(i) == 1));
            }
        }
    }
}

TEST_CASE("P_IT + P_IF = t^2/(1-t^2) + (1-chi_p(r+1)) t^2r/(1-t^2r)")
{
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        for (int r = 1; r <= 6; ++r) {
            TruncSpaceParams par(r, p, 2);
            int cutoff = 6 * par.rho() * static_cast<int>(p);
            auto lhs = series_of_index_set(make_IT(par), cutoff) +
                       series_of_index_set(make_IF(par), cutoff);
            RationalSeries t2;
            t2.times_monomial(2).over_one_minus(2);
            auto rhs = t2.expand(cutoff);
            if (chi(p, r + 1) == 0) {
                RationalSeries t2r;
                t2r.times_monomial(2 * r).over_one_minus(2 * r);
                rhs = rhs + t2r.expand(cutoff);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("divided_by_t and shifted")
{
    PowerSeries p(4);
    p.coeff(2) = 3;
    p.coeff(4) = 1;
    auto q = p.divided_by_t();
    CHECK(q.coeff(1) == 3);
    CHECK(q.coeff(3) == 1);
    CHECK(p.shifted(2).coeff(4) == 3);
    PowerSeries bad(2);
    bad.coeff(0) = 1;
    CHECK_THROWS_AS(bad.divided_by_t(), std::domain_error);
}

TEST_CASE("presentation series of a mixed polynomial/exterior ring")
{
    // F_p[u,x,s]/(x^{r+1}, s^2) with |u|=|x|=2, |s|=2r-1, r=2:
    // series 1/(1-t^2) * (1-t^6)/(1-t^2) * (1+t^3)
    PresentationShape shape;
    shape.polynomial_degrees = {2, 2};
    shape.exterior_degrees = {3};
    shape.relation_degrees = {6};
    auto s = presentation_series(shape).expand(10);
    RationalSeries check;
    check.times_one_minus(6).times_one_plus(3).over_one_minus(2).over_one_minus(2);
    CHECK(s == check.expand(10));
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(2) == 2);  // u, x
    CHECK(s.coeff(3) == 1);  // s
}
