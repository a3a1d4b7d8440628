#ifndef LOOPCOH_INDEX_SETS_HPP
#define LOOPCOH_INDEX_SETS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopcoh/fp.hpp"

namespace loopcoh {

inline int chi(long long p, long long s)
{
    return (s % p == 0) ? 0 : 1;
}

/**
 * Parameters of a truncated polynomial algebra F_p[x]/(x^{r+1}) with |x| =
 * alpha, together with the derived period rho = (r+1)alpha - 2.
 */
struct TruncSpaceParams
{
    int r;
    long long p;
    int alpha = 2;

    TruncSpaceParams(int r_, long long p_, int alpha_ = 2) : r(r_), p(p_), alpha(alpha_)
    {
        if (r < 1)
            throw std::invalid_argument("TruncSpaceParams: r must be >= 1");
        if (alpha < 2 || alpha % 2 != 0)
            throw std::invalid_argument("TruncSpaceParams: alpha must be even and >= 2");
        if (!is_prime(p))
            throw std::invalid_argument("TruncSpaceParams: p must be prime");
    }

    int rho() const { return (r + 1) * alpha - 2; }
    bool divisible() const { return (r + 1) % p == 0; }  // p | (r+1)
};

enum class IndexSetKind { IF, IT, IFprime };

struct IndexSetSpec
{
    IndexSetKind kind;
    TruncSpaceParams params;
};

/// The displaying pair k = rho*i + alpha*j.
struct IndexWitness
{
    long long i;
    int j;
};

/**
 * Witness for membership of k in IF (want_free) or IT (!want_free):
 * k = rho*i + alpha*j with chi_p(r+1) <= j <= r, i >= 0 and the congruence
 * p | ((r+1)i + j) for IF, p∤ for IT.  Scans all admissible j, so a second
 * witness would be found if one existed.
 */
inline std::optional<IndexWitness> index_set_witness(const TruncSpaceParams& par,
                                                     long long k, bool want_free)
{
    if (k <= 0)
        return std::nullopt;
    const long long rho = par.rho();
    std::optional<IndexWitness> found;
    for (int j = chi(par.p, par.r + 1); j <= par.r; ++j) {
        long long rest = k - static_cast<long long>(par.alpha) * j;
        if (rest < 0 || rest % rho != 0)
            continue;
        long long i = rest / rho;
        bool divides = ((static_cast<long long>(par.r + 1) * i + j) % par.p) == 0;
        if (divides != want_free)
            continue;
        if (found)
            throw std::logic_error("index set witness is not unique");
        found = IndexWitness{i, j};
    }
    return found;
}

inline bool index_set_membership(const IndexSetSpec& spec, long long k)
{
    if (k < 1)
        throw std::invalid_argument("index_set_membership: k must be >= 1");
    const TruncSpaceParams& par = spec.params;
    switch (spec.kind) {
    case IndexSetKind::IF:
        return index_set_witness(par, k, true).has_value();
    case IndexSetKind::IT:
        return index_set_witness(par, k, false).has_value();
    case IndexSetKind::IFprime: {
        if (par.alpha != 2)
            throw std::invalid_argument("IF' is only defined for alpha = 2");
        if (!par.divisible())
            return index_set_witness(par, k, true).has_value();
        long long two_r = 2LL * par.r;
        if (k > 2 && (k - 2) % two_r == 0)
            return true;                        // plus (2 + 2rN); wins over the removal
        if (k % two_r == 0)
            return false;                       // IF minus 2rN
        return index_set_witness(par, k, true).has_value();
    }
    }
    return false;
}

inline std::vector<long long> index_set_enumerate(const IndexSetSpec& spec, long long n)
{
    std::vector<long long> out;
    for (long long k = 1; k <= n; ++k)
        if (index_set_membership(spec, k))
            out.push_back(k);
    return out;
}

inline IndexSetSpec make_IF(const TruncSpaceParams& p) { return {IndexSetKind::IF, p}; }
inline IndexSetSpec make_IT(const TruncSpaceParams& p) { return {IndexSetKind::IT, p}; }
inline IndexSetSpec make_IFprime(const TruncSpaceParams& p)
{
    return {IndexSetKind::IFprime, p};
}

}  // namespace loopcoh

#endif
