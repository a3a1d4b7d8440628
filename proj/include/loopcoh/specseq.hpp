#ifndef LOOPCOH_SPECSEQ_HPP
#define LOOPCOH_SPECSEQ_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopcoh/loop_space.hpp"
#include "loopcoh/series.hpp"

namespace loopcoh {

/**
 * A bigraded page: dimensions per (filtration s, complementary degree t),
 * kept for total degree s + t up to a cutoff, with optional basis labels.
 */
struct BigradedPage
{
    int page_index = 0;
    int cutoff = 0;
    std::map<std::pair<long long, long long>, long long> dims;
    std::map<std::pair<long long, long long>, std::vector<std::string>> labels;

    void add(long long s, long long t, long long d = 1)
    {
        if (d != 0 && s + t <= cutoff)
            dims[{s, t}] += d;
    }
    void label(long long s, long long t, std::string name)
    {
        if (s + t <= cutoff)
            labels[{s, t}].push_back(std::move(name));
    }
    long long dim(long long s, long long t) const
    {
        auto it = dims.find({s, t});
        return it == dims.end() ? 0 : it->second;
    }
    PowerSeries total_series() const
    {
        PowerSeries out(cutoff);
        for (const auto& [st, d] : dims)
            out.add_to_coeff(static_cast<int>(st.first + st.second), static_cast<BigInt>(d));
        return out;
    }
};

/// E_2 = F_p[u] (x) H^*(LCP^r) of the Serre spectral sequence of
/// LCP^r -> LCP^r_hT -> BT.
BigradedPage serre_e2(int r, long long p, int cutoff);

/// E_3 from the ranks of the action differential (d_2 y = u dy).
BigradedPage serre_e3_by_rank(int r, long long p, int cutoff);

/// E_3 from the closed-form presentation, with generator labels on request.
BigradedPage serre_e3_presentation(int r, long long p, int cutoff, bool with_labels = false);

/// Poincare series of the E_3 term from the closed-form corollary (alpha = 2).
PowerSeries serre_e3_closed_series(int r, long long p, int cutoff);
std::string serre_e3_closed_form_text(int r, long long p);

/// The headline check: the rank-computed E_3 series equals P_{r,p}(t).
bool serre_collapse_check(int r, long long p, int cutoff);

/// One Morse E_1 column: free F_p[u] generators and/or plain (torsion)
/// classes, with print labels.
struct MorseColumn
{
    long long n = 0;
    std::vector<long long> free_degrees;
    std::vector<long long> plain_degrees;
    std::vector<std::string> free_labels;
    std::vector<std::string> plain_labels;
};

struct MorseE1Catalog
{
    int r;
    long long p;
    bool equivariant;
    bool twisted = false;
    int cutoff;
    std::vector<MorseColumn> columns;

    PowerSeries total_series() const;
    PowerSeries odd_series() const;
};

MorseE1Catalog morse_e1(int r, long long p, bool equivariant, int cutoff);

/// E_1 of the p-twisted equivariant Morse spectral sequence, column n taken
/// from the Borel cohomology of the geodesic space with the pn-twisted action.
MorseE1Catalog morse_e1_twisted(int r, long long p, int cutoff);

/// closed forms of the equivariant E_1 series
RationalSeries morse_e1_closed_form(int r, long long p);

struct StructuralReport
{
    int r;
    long long p;
    bool even_classes_in_p_columns = false;   // (i)
    bool odd_is_t_times_even = false;         // (ii)
    bool localized_ranks_match = false;       // (iii)
    bool twisted_is_u_tensor = false;         // (iv)
    bool agrees_with_abutment = false;        // (v): E_inf <= E_1, odd surjectivity
    bool collapse_gap_even_odd_pairs = false; // (E_1 - E_inf)/(1+t) has >= 0 coeffs
    bool morse_series_closed_form = false;    // assembled = closed form
    bool odd_counting = false;                // odd dims per column: r+1 or r
    std::vector<std::string> failures;

    bool all() const
    {
        return even_classes_in_p_columns && odd_is_t_times_even && localized_ranks_match &&
               twisted_is_u_tensor && agrees_with_abutment && collapse_gap_even_odd_pairs &&
               morse_series_closed_form && odd_counting;
    }
};

StructuralReport structural_checks(int r, long long p, int cutoff);

}  // namespace loopcoh

#endif
