#include <doctest.h>

#include "loopcoh/linalg.hpp"

using namespace loopcoh;

namespace {

PrimeFieldMatrix make_fp(long long p, std::initializer_list<std::initializer_list<long long>> rows)
{
    PrimeFieldMatrix m(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long long v : row)
            m(i, j++) = Fp(v, p);
        ++i;
    }
    return m;
}

// Oracle for small kernels: enumerate all of F_p^n.
std::vector<PrimeFieldVector> brute_force_kernel(const PrimeFieldMatrix& m, long long p)
{
    std::vector<PrimeFieldVector> out;
    const Eigen::Index n = m.cols();
    long long total = 1;
    for (Eigen::Index i = 0; i < n; ++i)
        total *= p;
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        PrimeFieldVector v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v(i) = Fp(c % p, p);
            c /= p;
        }
        PrimeFieldVector mv = mat_vec(m, v);
        if (is_zero_vector(mv))
            out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("rref of identity over F_3")
{
    PrimeFieldMatrix id = make_fp(3, {{1, 0}, {0, 1}});
    auto e = rref(id);
    CHECK(e.rank == 2);
    CHECK(e.pivot_cols == std::vector<Eigen::Index>{0, 1});
    CHECK(matrices_equal(e.reduced, id));
}

TEST_CASE("rref of zero matrix")
{
    PrimeFieldMatrix z = PrimeFieldMatrix::Constant(3, 4, Fp(0, 7));
    auto e = rref(z);
    CHECK(e.rank == 0);
    CHECK(e.pivot_cols.empty());
}

TEST_CASE("rank-1 matrix over F_5: row2 = 2 * row1")
{
    PrimeFieldMatrix m = make_fp(5, {{1, 2}, {2, 4}});
    auto e = rref(m);
    CHECK(e.rank == 1);
}

TEST_CASE("rref is idempotent")
{
    PrimeFieldMatrix m = make_fp(5, {{1, 2, 3}, {4, 0, 1}, {2, 4, 1}, {0, 1, 3}});
    auto e1 = rref(m);
    auto e2 = rref(e1.reduced);
    CHECK(matrices_equal(e1.reduced, e2.reduced));
    CHECK(e1.rank == e2.rank);
}

TEST_CASE("kernel of identity is empty")
{
    PrimeFieldMatrix id = make_fp(3, {{1, 0}, {0, 1}});
    CHECK(kernel_basis(id).empty());
}

TEST_CASE("kernel of zero 2x3 has three basis vectors")
{
    PrimeFieldMatrix z = PrimeFieldMatrix::Constant(2, 3, Fp(0, 3));
    CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("kernel of [[1,1]] over F_2, against enumeration oracle")
{
    PrimeFieldMatrix m = make_fp(2, {{1, 1}});
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0) == Fp(1, 2));
    CHECK(basis[0](1) == Fp(1, 2));

    auto all = brute_force_kernel(m, 2);
    CHECK(all.size() == 1);  // p^dim - 1 nonzero kernel vectors
}

TEST_CASE("rank-nullity and kernel vectors annihilate, F_p and Q")
{
    PrimeFieldMatrix m = make_fp(5, {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}});
    auto e = rref(m);
    auto basis = kernel_basis(m);
    CHECK(static_cast<Eigen::Index>(basis.size()) + e.rank == m.cols());
    for (const auto& v : basis) {
        PrimeFieldVector mv = mat_vec(m, v);
        CHECK(is_zero_vector(mv));
    }

    RationalMatrix q(2, 3);
    q << Rational(1, 2), Rational(1, 3), Rational(0), Rational(1), Rational(2, 3), Rational(0);
    auto eq = rref(q);
    CHECK(eq.rank == 1);
    auto kq = kernel_basis(q);
    CHECK(kq.size() == 2);
    for (const auto& v : kq) {
        DenseVector<Rational> qv = mat_vec(q, v);
        CHECK(is_zero_vector(qv));
    }
}

TEST_CASE("solve_exact finds exact solutions and detects inconsistency")
{
    PrimeFieldMatrix a = make_fp(7, {{1, 2}, {3, 4}, {5, 6}});
    PrimeFieldVector x0(2);
    x0 << Fp(3, 7), Fp(5, 7);
    PrimeFieldVector b = mat_vec(a, x0);
    PrimeFieldVector x;
    REQUIRE(solve_exact(a, b, x));
    PrimeFieldVector ax = mat_vec(a, x);
    for (Eigen::Index i = 0; i < b.size(); ++i)
        CHECK(ax(i) == b(i));

    PrimeFieldVector bad(3);
    bad << Fp(1, 7), Fp(0, 7), Fp(0, 7);
    // (1,0,0) is not in the column space: columns are (1,3,5),(2,4,6)
    PrimeFieldVector y;
    CHECK_FALSE(solve_exact(a, bad, y));
}

TEST_CASE("FieldTag validates primality by trial division")
{
    CHECK(FieldTag::prime_field(2).p == 2);
    CHECK(FieldTag::prime_field(97).name() == "F_97");
    CHECK_THROWS_AS(FieldTag::prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag::prime_field(91), std::invalid_argument);  // 7*13
    CHECK(FieldTag::rationals().name() == "Q");
}

TEST_CASE("Fp arithmetic and inverse")
{
    Fp a(3, 7), b(5, 7);
    CHECK(a + b == Fp(1, 7));
    CHECK(a * b == Fp(1, 7));
    CHECK(a.inverse() == Fp(5, 7));
    CHECK((a / b) == Fp(3, 7) * Fp(3, 7));
    CHECK(Fp(-1, 7) == Fp(6, 7));
    CHECK(a + Fp(0) == a);  // literal zero adopts the modulus
    CHECK_THROWS_AS(Fp(0, 5).inverse(), std::domain_error);
}
