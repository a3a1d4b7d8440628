#ifndef LOOPCOH_DERIVED_HPP
#define LOOPCOH_DERIVED_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopcoh/linalg.hpp"
#include "loopcoh/polynomial.hpp"

namespace loopcoh {

struct DerivedParams
{
    int r;
    long long p;
    int alpha;

    int y_degree() const { return (r + 1) * alpha; }
    int dy_degree() const { return (r + 1) * alpha - 1; }
    /// default internal cutoff: room for every class through simplicial degree 3
    int default_cutoff() const { return 3 * dy_degree() + alpha; }
};

/**
 * One level Omega-bar R_q = F_p[x, y_1..y_q] (x) Lambda(dx, dy_1..dy_q), with
 * generator indices 0 = x, 1..q = y_j, q+1 = dx, q+2..2q+1 = dy_j and a
 * monomial basis per internal degree.
 */
struct ResolutionLevel
{
    int q;
    VariableList vars;
    std::vector<std::vector<Monomial>> basis;  // per internal degree

    int x_index() const { return 0; }
    int y_index(int j) const { return j; }
    int dx_index() const { return q + 1; }
    int dy_index(int j) const { return q + 1 + j; }

    Eigen::Index dim(int n) const
    {
        return (n < 0 || n >= static_cast<int>(basis.size()))
                   ? 0
                   : static_cast<Eigen::Index>(basis[n].size());
    }

    Eigen::Index index_of(int n, const Monomial& m) const;
};

/**
 * The simplicial de Rham algebra of the almost free resolution of
 * F_p[x]/(x^{r+1}), built up to a maximal level and internal cutoff.  Face
 * and degeneracy maps are algebra maps fixed on generators; theta and the de
 * Rham derivation act by the graded Leibniz rule.
 */
class SimplicialOmega
{
public:
    SimplicialOmega(const DerivedParams& params, int max_level, int internal_cutoff);

    const DerivedParams& params() const { return params_; }
    int max_level() const { return max_level_; }
    int cutoff() const { return cutoff_; }
    const ResolutionLevel& level(int q) const { return levels_.at(q); }

    Poly<Fp> face(int q, int i, const Poly<Fp>& v) const;
    Poly<Fp> degeneracy(int q, int i, const Poly<Fp>& v) const;
    Poly<Fp> theta(int q, const Poly<Fp>& v) const;
    Poly<Fp> derham(int q, const Poly<Fp>& v) const;

    PrimeFieldMatrix face_matrix(int q, int i, int n) const;
    PrimeFieldMatrix degeneracy_matrix(int q, int i, int n) const;
    PrimeFieldMatrix theta_matrix(int q, int n) const;

    /// columns spanning N_q = cap_{j=1..q} ker(d_j) in internal degree n
    PrimeFieldMatrix normalized_basis(int q, int n) const;

    /// boundary sum_{j} (-1)^j d_j of the unnormalized chain complex
    PrimeFieldMatrix unnormalized_boundary(int q, int n) const;

    PrimeFieldVector coords(int q, int n, const Poly<Fp>& v) const;
    Poly<Fp> from_coords(int q, int n, const PrimeFieldVector& v) const;

    // named cycles in level i
    Poly<Fp> omega_elem(int i) const;  // dy_1 ... dy_i
    Poly<Fp> alpha_elem(int i) const;  // dx omega_i
    Poly<Fp> beta_elem(int i) const;   // theta(alpha_i)

    Poly<Fp> x_power(int q, int exponent) const;

    /// shuffle product of chains at levels i and j, landing at level i+j
    Poly<Fp> shuffle_product(int i, const Poly<Fp>& u, int j, const Poly<Fp>& v) const;

private:
    DerivedParams params_;
    int max_level_;
    int cutoff_;
    std::vector<ResolutionLevel> levels_;

    std::vector<Poly<Fp>> face_images(int q, int i) const;
    std::vector<Poly<Fp>> degeneracy_images(int q, int i) const;
    Poly<Fp> apply_map(const Poly<Fp>& v, const std::vector<Poly<Fp>>& images,
                       const VariableList& target_vars) const;
};

/// dims of H_(i,n) predicted by the closed-form answer
long long derived_closed_form_dim(const DerivedParams& params, int i, int n);

struct BidegreeCell
{
    int simplicial;
    int internal;
    long long dim_bruteforce;
    long long dim_closed_form;
    bool match;
};

struct BidegreeHomology
{
    DerivedParams params;
    int max_simplicial;
    int internal_cutoff;
    std::vector<BidegreeCell> cells;
    bool all_match = true;

    long long dim(int i, int n) const;
};

/**
 * Brute-force homology of the normalized chains, one exact linear-algebra
 * computation per bidegree, compared against the closed form.  Internal
 * degrees are only meaningful where boundaries from level i+1 fit under the
 * cutoff, which they always do here since faces preserve internal degree.
 */
BidegreeHomology homology_table(const SimplicialOmega& s, int max_simplicial);

/// homology of (C_*, sum (-1)^j d_j); agrees with the normalized computation
long long unnormalized_homology_dim(const SimplicialOmega& s, int i, int n);

struct CycleReport
{
    bool in_normalized = false;
    bool is_cycle = false;
    bool nonzero_in_homology = false;

    bool ok() const { return in_normalized && is_cycle && nonzero_in_homology; }
};

/// checks for the named representing cycles at simplicial degree i
CycleReport verify_cycle(const SimplicialOmega& s, int i, const Poly<Fp>& elem);

/// beta_i expanded against the explicit alternating-sum formula
bool beta_formula_check(const SimplicialOmega& s, int i);

/// is `a` homologous to `b` in the unnormalized complex at (level, n)?
bool homologous(const SimplicialOmega& s, int level, int n, const Poly<Fp>& a,
                const Poly<Fp>& b);

/// de Rham action on homology: formulas d(omega_i) = 0, d(a_i) = 0,
/// d(b_i) = (1+(r+1)i) a_i, checked at the cycle level
bool derham_formula_check(const SimplicialOmega& s, int i);

/// matrix of the induced de Rham map H_(i,n) -> H_(i,n-1) in the pinned bases
PrimeFieldMatrix de_rham_on_homology(const SimplicialOmega& s, int i, int n);

}  // namespace loopcoh

#endif
