#ifndef LOOPCOH_LOOP_SPACE_HPP
#define LOOPCOH_LOOP_SPACE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopcoh/index_sets.hpp"
#include "loopcoh/linalg.hpp"
#include "loopcoh/series.hpp"

namespace loopcoh {

/// Binomial coefficient mod p via Lucas's theorem.
long long binomial_mod_p(long long n, long long k, long long p);

/**
 * One canonical basis element of H*(LX).
 *
 * Divisible case (p | r+1): x^j (dx)^eps gamma_i(omega), encoded (j, eps, i).
 * Coprime case: the unit, b_0^{j-1} b_i (typ 'b') or b_0^{j-1} a_i (typ 'a'),
 * with 1 <= j <= r.  Products of basis elements rewrite back into this form.
 */
struct LoopBasisElem
{
    // divisible case
    int j = 0;
    int eps = 0;
    long long i = 0;
    // coprime case
    bool is_unit = false;
    char typ = 'b';

    bool operator==(const LoopBasisElem& o) const
    {
        return j == o.j && eps == o.eps && i == o.i && is_unit == o.is_unit && typ == o.typ;
    }
};

/**
 * Closed-form model of H*(LX) for H*(X) = F_p[x]/(x^{r+1}), with its basis
 * per degree up to a cutoff and the circle-action differential.
 */
class LoopAlgebraModel
{
public:
    static LoopAlgebraModel build(const TruncSpaceParams& params, int cutoff);

    const TruncSpaceParams& params() const { return params_; }
    bool divisible() const { return params_.divisible(); }
    int cutoff() const { return cutoff_; }

    const std::vector<LoopBasisElem>& basis(int degree) const;
    long long dim(int degree) const { return static_cast<long long>(basis(degree).size()); }

    long long degree_of(const LoopBasisElem& e) const;
    std::string name_of(const LoopBasisElem& e) const;

    /// Canonical-form product; the scalar is 0 exactly when the product dies.
    std::pair<Fp, std::optional<LoopBasisElem>> product(const LoopBasisElem& a,
                                                        const LoopBasisElem& b) const;

    /// Circle action differential d (degree -1) on a basis element.
    std::pair<Fp, std::optional<LoopBasisElem>> differential(const LoopBasisElem& e) const;

    /// Matrix of d : H^degree -> H^{degree-1} in the canonical bases.
    PrimeFieldMatrix action_matrix(int degree) const;

    PowerSeries series(int upto) const;

private:
    TruncSpaceParams params_;
    int cutoff_;
    std::vector<std::vector<LoopBasisElem>> basis_by_degree_;

    explicit LoopAlgebraModel(const TruncSpaceParams& p, int cutoff)
        : params_(p), cutoff_(cutoff)
    {
    }
};

/// Exhaustive associativity/commutativity check of the rewrite rules on all
/// basis elements whose degree sums stay under the cutoff.
bool product_confluence_check(const LoopAlgebraModel& model, int degree_limit);

struct ActionCounts
{
    long long kernel = 0;
    long long image = 0;
    long long cokernel = 0;

    bool operator==(const ActionCounts& o) const
    {
        return kernel == o.kernel && image == o.image && cokernel == o.cokernel;
    }
};

/// Counts for d : H^{2k} -> H^{2k-1} measured by matrix rank.
ActionCounts action_counts(const LoopAlgebraModel& model, long long k);

/// The same counts predicted by the index sets IF / IT.
ActionCounts action_counts_predicted(const TruncSpaceParams& params, long long k);

/**
 * H*(LCP^r_hT; F_p) as a graded F_p[u]-module: free generators plus
 * u-torsion generators located by the index sets.
 */
struct GradedUModule
{
    std::vector<long long> free_degrees;
    std::vector<long long> torsion_degrees;
    long long cutoff = 0;

    PowerSeries poincare() const;
};

GradedUModule main_module(int r, long long p, int cutoff);

/// The Poincare series P_{r,p}(t) = (1 + sum_{k in IF} t^k)/(1-t).
PowerSeries main_poincare(int r, long long p, int cutoff);

/// printable closed form; includes the rewritten product form when p | (r+1)
std::string main_poincare_closed_form(int r, long long p);

/// H^*(LX; Q): dimension (0 or 1) per degree and whether d is an isomorphism
/// out of that degree.
struct RationalLoopModel
{
    int r;
    int alpha;
    std::vector<int> dims;        // index = degree
    std::vector<bool> d_is_iso;   // index = source degree
};

RationalLoopModel rational_loop_model(int r, int alpha, int cutoff);

/// Borel series over Q from the ring presentation Q[u] (+) span{w_i^(j)}.
PowerSeries rational_borel_series(int r, int alpha, int cutoff);

/// The same series assembled from ranks of the rational action differential.
PowerSeries rational_borel_series_by_rank(int r, int alpha, int cutoff);

}  // namespace loopcoh

#endif
