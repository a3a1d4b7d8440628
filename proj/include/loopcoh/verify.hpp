#ifndef LOOPCOH_VERIFY_HPP
#define LOOPCOH_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopcoh/derived.hpp"

namespace loopcoh {

struct CheckResult
{
    std::string name;
    int r = 0;
    long long p = 0;
    bool pass = false;
    std::string detail;
};

enum class Mutation { none, qk_sign };

struct VerifyOptions
{
    std::vector<int> r_values{1, 2, 3, 4};
    std::vector<long long> p_values{2, 3, 5};
    std::optional<int> cutoff;  // per-cell default: 6 * rho * p
    bool strict = false;        // include the derived-functor brute force
    int max_simplicial = 3;
    Mutation mutation = Mutation::none;
    int jobs = 1;
};

/// per-cell cutoff 6 * rho * p with rho = 2r (alpha = 2)
int default_cutoff(int r, long long p);

/// Every verification check for one (r, p) cell, in a fixed order.
std::vector<CheckResult> verify_cell(int r, long long p, int cutoff, Mutation mutation);

/// The derived-functor brute-force suite for one (r, p, alpha) tuple.
std::vector<CheckResult> verify_derived_tuple(const DerivedParams& params,
                                              int max_simplicial);

/// The full suite over the grid.  Results come back in deterministic order
/// (r ascending, then p, then check order) regardless of the job count.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

inline bool all_passed(const std::vector<CheckResult>& results)
{
    for (const auto& c : results)
        if (!c.pass)
            return false;
    return true;
}

}  // namespace loopcoh

#endif
