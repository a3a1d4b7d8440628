#include "loopcoh/geodesy.hpp"

#include "loopcoh/linalg.hpp"

namespace loopcoh {

namespace {

const VariableList kPhiVars{{"c1", 2, false}, {"c2", 4, false}};
const VariableList kQVars{{"x1", 2, false}, {"x2", 2, false}};

}  // namespace

PhiSequence phi_sequence(int r)
{
    if (r < 1)
        throw std::invalid_argument("phi_sequence: r must be >= 1");
    PhiSequence out;
    out.r = r;
    out.polys.resize(r + 2);
    out.polys[0] = Poly<long long>::constant(1, 2);
    out.polys[1] = Poly<long long>::term(-1, Monomial{1, 0});
    Poly<long long> c1 = Poly<long long>::variable(1, 2, 0);
    Poly<long long> c2 = Poly<long long>::variable(1, 2, 1);
    for (int i = 2; i <= r + 1; ++i)
        out.polys[i] = -c1.multiply(out.polys[i - 1], kPhiVars) -
                       c2.multiply(out.polys[i - 2], kPhiVars);
    return out;
}

QSequence q_sequence(int r, bool mutate_sign)
{
    if (r < 1)
        throw std::invalid_argument("q_sequence: r must be >= 1");
    QSequence out;
    out.r = r;
    out.mutated = mutate_sign;
    out.polys.resize(r + 2);
    for (int k = 0; k <= r + 1; ++k) {
        Poly<long long> q;
        for (int i = 0; i <= k; ++i) {
            long long c = (mutate_sign && i == k && k >= 1) ? -1 : 1;
            q.add_term(c, Monomial{i, k - i});
        }
        out.polys[k] = std::move(q);
    }
    return out;
}

RationalSeries projective_bundle_series(int r)
{
    RationalSeries s;
    s.times_one_minus(2 * r).times_one_minus(2 * r + 2).over_one_minus(2, 2);
    return s;
}

Poly<long long> a_class(int k, int r)
{
    if (k < 0 || r < 1)
        throw std::invalid_argument("a_class: need k >= 0, r >= 1");
    Poly<long long> a;
    for (int i = 0; i <= r - 1; ++i)
        a.add_term(i + 1, Monomial{k + i, r - 1 - i});
    return a;
}

KernelReport kernel_of_x1_minus_x2(int r, long long p, int degree_cutoff, bool mutate_sign)
{
    FieldTag field = FieldTag::prime_field(p);
    QuotientRing<Fp> ring = projective_bundle_ring<Fp>(r, field, mutate_sign);

    Poly<Fp> x1_minus_x2 = ring.var(0) - ring.var(1);

    KernelReport report;
    report.r = r;
    report.p = p;

    bool divisible = (r + 1) % p == 0;
    int trunc_top = divisible ? r : r - 1;  // cokernel should be F_p[x1]/(x1^{top+1})

    bool spans = true;
    bool coker_ok = true;

    for (int d = 0; d <= degree_cutoff; d += 2) {
        std::vector<Monomial> basis_d = ring.degree_basis(d);
        std::vector<Monomial> basis_up = ring.degree_basis(d + 2);

        DenseMatrix<Fp> m = DenseMatrix<Fp>::Constant(
            static_cast<Eigen::Index>(basis_up.size()),
            static_cast<Eigen::Index>(basis_d.size()), Fp(0, p));
        for (std::size_t j = 0; j < basis_d.size(); ++j) {
            Poly<Fp> image =
                ring.multiply(Poly<Fp>::term(Fp(1, p), basis_d[j]), x1_minus_x2);
            m.col(static_cast<Eigen::Index>(j)) = ring.basis_coordinates(image, basis_up);
        }

        KernelDegree kd;
        kd.degree = d;
        for (const auto& v : kernel_basis(m)) {
            Poly<Fp> coset;
            for (Eigen::Index i = 0; i < v.size(); ++i)
                if (!scalar_is_zero(v(i)))
                    coset.add_term(v(i), basis_d[static_cast<std::size_t>(i)]);
            kd.kernel.push_back(std::move(coset));
        }
        report.total_kernel_dim += static_cast<long long>(kd.kernel.size());

        // cokernel of the multiplication map arriving in this degree
        if (d == 0) {
            kd.cokernel_dim = static_cast<long long>(basis_d.size());
        } else {
            std::vector<Monomial> basis_prev = ring.degree_basis(d - 2);
            DenseMatrix<Fp> prev = DenseMatrix<Fp>::Constant(
                static_cast<Eigen::Index>(basis_d.size()),
                static_cast<Eigen::Index>(basis_prev.size()), Fp(0, p));
            for (std::size_t j = 0; j < basis_prev.size(); ++j) {
                Poly<Fp> image =
                    ring.multiply(Poly<Fp>::term(Fp(1, p), basis_prev[j]), x1_minus_x2);
                prev.col(static_cast<Eigen::Index>(j)) = ring.basis_coordinates(image, basis_d);
            }
            kd.cokernel_dim = static_cast<long long>(basis_d.size()) - matrix_rank(prev);
        }
        report.total_cokernel_dim += kd.cokernel_dim;

        long long expected_coker = (d / 2 <= trunc_top) ? 1 : 0;
        if (kd.cokernel_dim != expected_coker)
            coker_ok = false;

        // the classes x1^k a_0 with 2(k + r - 1) = d must span this kernel
        std::vector<Poly<Fp>> expected;
        int k = d / 2 - (r - 1);
        int k_lo = divisible ? 0 : 1;
        if (k >= k_lo && k <= r)
            expected.push_back(ring.reduce(poly_from_integers<Fp>(a_class(k, r), field)));
        if (expected.size() != kd.kernel.size()) {
            spans = false;
        } else if (!expected.empty()) {
            DenseMatrix<Fp> joint = DenseMatrix<Fp>::Constant(
                static_cast<Eigen::Index>(basis_d.size()),
                static_cast<Eigen::Index>(kd.kernel.size() + expected.size()), Fp(0, p));
            Eigen::Index col = 0;
            for (const auto& c : kd.kernel)
                joint.col(col++) = ring.basis_coordinates(c, basis_d);
            for (const auto& c : expected)
                joint.col(col++) = ring.basis_coordinates(c, basis_d);
            if (matrix_rank(joint) != static_cast<Eigen::Index>(kd.kernel.size()))
                spans = false;
        }

        report.degrees.push_back(std::move(kd));
    }

    report.a_classes_span = spans;
    report.cokernel_is_truncated = coker_ok;

    // (x2 - x1) a_k = x1^k (Q_r - (r+1) x1^r), as an exact polynomial identity
    report.a_identity_holds = true;
    Poly<long long> x1 = Poly<long long>::variable(1, 2, 0);
    Poly<long long> x2 = Poly<long long>::variable(1, 2, 1);
    QSequence q = q_sequence(r, mutate_sign);
    for (int k = 0; k <= r; ++k) {
        Poly<long long> lhs = (x2 - x1).multiply(a_class(k, r), kQVars);
        Poly<long long> bracket = q.polys[r] - Poly<long long>::term(r + 1, Monomial{r, 0});
        Poly<long long> rhs = Poly<long long>::term(1, Monomial{k, 0}).multiply(bracket, kQVars);
        if (lhs != rhs)
            report.a_identity_holds = false;
    }

    return report;
}

QuotientRing<Fp> unit_tangent_ring(int r, long long p)
{
    FieldTag field = FieldTag::prime_field(p);
    bool divisible = (r + 1) % p == 0;
    if (divisible) {
        VariableList vars{{"x", 2, false}, {"s", 2 * r - 1, true}};
        Poly<Fp> rel = Poly<Fp>::variable(Fp(1, p), 2, 0, r + 1);
        return QuotientRing<Fp>(std::move(vars), {rel}, field);
    }
    VariableList vars{{"x", 2, false}, {"sb", 2 * r + 1, true}};
    Poly<Fp> rel = Poly<Fp>::variable(Fp(1, p), 2, 0, r);
    return QuotientRing<Fp>(std::move(vars), {rel}, field);
}

std::string borel_case_name(BorelCase c)
{
    switch (c) {
    case BorelCase::coprime:
        return "coprime";
    case BorelCase::divisible_dividing:
        return "divisible_dividing";
    case BorelCase::divisible_not_dividing:
        return "divisible_not_dividing";
    }
    return "?";
}

GeodesicBorelPresentation geodesic_borel_ring(int r, long long p, long long n)
{
    if (n < 1)
        throw std::invalid_argument("geodesic_borel_ring: n must be >= 1");
    FieldTag field = FieldTag::prime_field(p);
    if (n % p != 0)
        return {r, p, n, BorelCase::coprime, projective_bundle_ring<Fp>(r, field)};
    if ((r + 1) % p == 0) {
        VariableList vars{{"u", 2, false}, {"x", 2, false}, {"s", 2 * r - 1, true}};
        Poly<Fp> rel = Poly<Fp>::variable(Fp(1, p), 3, 1, r + 1);
        return {r, p, n, BorelCase::divisible_dividing,
                QuotientRing<Fp>(std::move(vars), {rel}, field)};
    }
    VariableList vars{{"u", 2, false}, {"x", 2, false}, {"sb", 2 * r + 1, true}};
    Poly<Fp> rel = Poly<Fp>::variable(Fp(1, p), 3, 1, r);
    return {r, p, n, BorelCase::divisible_not_dividing,
            QuotientRing<Fp>(std::move(vars), {rel}, field)};
}

bool restriction_surjectivity_check(int r, long long p, int degree_cutoff)
{
    FieldTag field = FieldTag::prime_field(p);
    QuotientRing<Fp> geo = projective_bundle_ring<Fp>(r, field);
    QuotientRing<Fp> tangent = unit_tangent_ring(r, p);

    // the witness x1 -> x, x2 -> x must kill both relations
    QSequence q = q_sequence(r);
    for (int k : {r, r + 1}) {
        Poly<Fp> image;
        for (const auto& [m, c] : q.polys[k].terms()) {
            Monomial xm{m.total_exponent(), 0};
            image.add_term(Fp(c, p), xm);
        }
        if (!tangent.ideal_membership(image))
            return false;
    }

    for (int d = 0; d <= degree_cutoff; d += 2) {
        std::vector<Monomial> target = tangent.degree_basis(d);
        std::vector<Monomial> source = geo.degree_basis(d);
        if (target.empty())
            continue;
        if (source.size() < target.size())
            return false;
        DenseMatrix<Fp> images = DenseMatrix<Fp>::Constant(
            static_cast<Eigen::Index>(target.size()),
            static_cast<Eigen::Index>(source.size()), Fp(0, p));
        for (std::size_t j = 0; j < source.size(); ++j) {
            Monomial xm{source[j].total_exponent(), 0};
            Poly<Fp> im = tangent.reduce(Poly<Fp>::term(Fp(1, p), xm));
            images.col(static_cast<Eigen::Index>(j)) = tangent.basis_coordinates(im, target);
        }
        if (matrix_rank(images) != static_cast<Eigen::Index>(target.size()))
            return false;
    }
    return true;
}

}  // namespace loopcoh
