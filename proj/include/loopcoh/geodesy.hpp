#ifndef LOOPCOH_GEODESY_HPP
#define LOOPCOH_GEODESY_HPP

#include <string>
#include <vector>

#include "loopcoh/quotient_ring.hpp"
#include "loopcoh/series.hpp"

namespace loopcoh {

/**
 * The relation polynomials phi_i in the Chern classes c1 (degree 2), c2
 * (degree 4) of the canonical plane bundle:
 *   phi_0 = 1, phi_1 = -c1, phi_i = -c1 phi_{i-1} - c2 phi_{i-2}.
 */
struct PhiSequence
{
    int r;
    std::vector<Poly<long long>> polys;  // phi_0 .. phi_{r+1}
};

PhiSequence phi_sequence(int r);

/**
 * The relation polynomials Q_k(x1,x2) = sum_{i<=k} x1^i x2^{k-i} in two
 * degree-2 variables.  They satisfy Q_i = (x1+x2)Q_{i-1} - x1 x2 Q_{i-2} and
 * Q_k(x,x) = (k+1)x^k.  With mutate_sign on, the coefficient of x1^k flips;
 * this exists only as a negative control for the verification harness.
 */
struct QSequence
{
    int r;
    bool mutated;
    std::vector<Poly<long long>> polys;  // Q_0 .. Q_{r+1}
};

QSequence q_sequence(int r, bool mutate_sign = false);

/// H*(Gr_2(C^{r+1})) = F[c1,c2]/(phi_r, phi_{r+1}).
template <typename Scalar>
QuotientRing<Scalar> grassmann_ring(int r, FieldTag field)
{
    if (r < 1)
        throw std::invalid_argument("grassmann_ring: r must be >= 1");
    PhiSequence phi = phi_sequence(r);
    VariableList vars{{"c1", 2, false}, {"c2", 4, false}};
    std::vector<Poly<Scalar>> rels{
        poly_from_integers<Scalar>(phi.polys[r], field),
        poly_from_integers<Scalar>(phi.polys[r + 1], field)};
    return QuotientRing<Scalar>(std::move(vars), std::move(rels), field);
}

/// H* of the projective bundle P(gamma_2), equal to the cohomology of the
/// space of unparametrized oriented geodesics: F[x1,x2]/(Q_r, Q_{r+1}).
template <typename Scalar>
QuotientRing<Scalar> projective_bundle_ring(int r, FieldTag field, bool mutate_sign = false)
{
    if (r < 1)
        throw std::invalid_argument("projective_bundle_ring: r must be >= 1");
    QSequence q = q_sequence(r, mutate_sign);
    VariableList vars{{"x1", 2, false}, {"x2", 2, false}};
    std::vector<Poly<Scalar>> rels{
        poly_from_integers<Scalar>(q.polys[r], field),
        poly_from_integers<Scalar>(q.polys[r + 1], field)};
    return QuotientRing<Scalar>(std::move(vars), std::move(rels), field);
}

/// Closed-form series of F[x1,x2]/(Q_r,Q_{r+1}).
RationalSeries projective_bundle_series(int r);

/**
 * Coefficient test for membership in (Q_r, Q_{r+1}): a homogeneous
 * P = sum p_i x1^i x2^{m-i} of exponent degree m >= r lies in the ideal iff
 * all p_i with max(0, m-r) <= i <= min(m, r) agree.  An empty window makes
 * the condition vacuously true.
 */
template <typename Scalar>
bool qcheck_membership(const Poly<Scalar>& p, int r)
{
    if (p.is_zero())
        return true;
    int m = -1;
    for (const auto& [mon, c] : p.terms()) {
        int total = mon.total_exponent();
        if (m < 0)
            m = total;
        else if (m != total)
            throw std::invalid_argument("qcheck_membership: inhomogeneous polynomial");
    }
    int lo = std::max(0, m - r), hi = std::min(m, r);
    bool have_first = false;
    Scalar first = Scalar(0);
    for (int i = lo; i <= hi; ++i) {
        Monomial mon{i, m - i};
        Scalar ci = Scalar(0);
        auto it = p.terms().find(mon);
        if (it != p.terms().end())
            ci = it->second;
        if (!have_first) {
            first = ci;
            have_first = true;
        } else if (!(ci == first)) {
            return false;
        }
    }
    return true;
}

/// The kernel classes a_k = x1^k sum_{i=0}^{r-1} (i+1) x1^i x2^{r-1-i}.
Poly<long long> a_class(int k, int r);

/// Per-degree kernel of multiplication by (x1 - x2) on F_p[x1,x2]/(Q_r,Q_{r+1}).
struct KernelDegree
{
    int degree;
    std::vector<Poly<Fp>> kernel;  // cosets in the degree basis
    long long cokernel_dim;        // of multiplication landing in this degree
};

struct KernelReport
{
    int r;
    long long p;
    std::vector<KernelDegree> degrees;
    long long total_kernel_dim = 0;
    long long total_cokernel_dim = 0;
    bool a_classes_span = false;        // a_k (resp. x1^k a_0) span the kernel
    bool a_identity_holds = false;      // (x2-x1) a_k = x1^k (Q_r - (r+1) x1^r)
    bool cokernel_is_truncated = false; // coker dims match F_p[x1]/(x1^{r+1}) or (x1^r)
};

KernelReport kernel_of_x1_minus_x2(int r, long long p, int degree_cutoff,
                                   bool mutate_sign = false);

/// H*(S(tau CP^r); F_p) per the mod p reduction of the integral computation.
QuotientRing<Fp> unit_tangent_ring(int r, long long p);

/// Integral presentation Z[t, sigma]/(t^{r+1}, sigma^2, (r+1)t^r, t^r sigma),
/// carried over a field; over Q it collapses to the truncated form.
template <typename Scalar>
QuotientRing<Scalar> tangent_integral_presentation(int r, FieldTag field)
{
    VariableList vars{{"t", 2, false}, {"sb", 2 * r + 1, true}};
    Poly<Scalar> t_r1 = Poly<Scalar>::variable(scalar_from<Scalar>(1, field), 2, 0, r + 1);
    Poly<Scalar> tor = Poly<Scalar>::variable(scalar_from<Scalar>(r + 1, field), 2, 0, r);
    Monomial ts{r, 1};
    Poly<Scalar> t_sb = Poly<Scalar>::term(scalar_from<Scalar>(1, field), ts);
    std::vector<Poly<Scalar>> rels;
    rels.push_back(std::move(t_r1));
    if (!tor.is_zero())
        rels.push_back(std::move(tor));
    rels.push_back(std::move(t_sb));
    return QuotientRing<Scalar>(std::move(vars), std::move(rels), field);
}

enum class BorelCase { coprime, divisible_dividing, divisible_not_dividing };

/// H*(ET x_T S(tau CP^r)^{(n)}; F_p), with the case picked from (p, n, r).
struct GeodesicBorelPresentation
{
    int r;
    long long p;
    long long n;
    BorelCase which;
    QuotientRing<Fp> ring;
};

GeodesicBorelPresentation geodesic_borel_ring(int r, long long p, long long n);

std::string borel_case_name(BorelCase c);

/**
 * Dimension-level check of the coprime-case restriction statement: under
 * x1, x2 -> x both relations die in the unit tangent ring, and the images of
 * the projective-bundle basis span each even degree there.
 */
bool restriction_surjectivity_check(int r, long long p, int degree_cutoff);

}  // namespace loopcoh

#endif
