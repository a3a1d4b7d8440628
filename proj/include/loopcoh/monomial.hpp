#ifndef LOOPCOH_MONOMIAL_HPP
#define LOOPCOH_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopcoh {

/**
 * A generator of a graded-commutative algebra.  Exterior variables square to
 * zero structurally and may only carry exponent 0 or 1.  Odd-degree variables
 * must be exterior so that the free graded-commutative algebra is well
 * defined in every characteristic.
 */
struct Variable
{
    std::string name;
    int degree = 0;
    bool exterior = false;
};

using VariableList = std::vector<Variable>;

/// Exponent vector over a fixed variable list, compared lexicographically.
struct Monomial
{
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    Monomial(std::initializer_list<int> e) : exponents(e) {}

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator!=(const Monomial& o) const { return exponents != o.exponents; }
    bool operator<(const Monomial& o) const
    {
        return std::lexicographical_compare(exponents.begin(), exponents.end(),
                                            o.exponents.begin(), o.exponents.end());
    }

    int total_exponent() const
    {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
};

inline int monomial_degree(const Monomial& m, const VariableList& vars)
{
    int d = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        d += m.exponents[i] * vars[i].degree;
    return d;
}

inline std::string monomial_name(const Monomial& m, const VariableList& vars)
{
    std::string s;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars[i].name;
        if (m.exponents[i] > 1)
            s += "^" + std::to_string(m.exponents[i]);
    }
    return s.empty() ? "1" : s;
}

/**
 * Graded-commutative product of two monomials in canonical (sorted) form.
 * Returns the Koszul sign in {-1,+1}, or 0 when an exterior variable
 * collides.  The sign counts inversions between odd-degree factors of the
 * two operands.
 */
inline int monomial_product(const Monomial& a, const Monomial& b,
                            const VariableList& vars, Monomial& out)
{
    const std::size_t n = vars.size();
    out.exponents.assign(n, 0);
    long long inversions = 0;
    long long odd_in_b_before = 0;  // odd factors of b with index < current a index
    // precompute prefix counts of odd factors of b
    std::vector<int> odd_prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        odd_prefix[i + 1] = odd_prefix[i] + ((vars[i].degree % 2 != 0) ? b.exponents[i] : 0);
    (void)odd_in_b_before;
    for (std::size_t i = 0; i < n; ++i) {
        int e = a.exponents[i] + b.exponents[i];
        if (vars[i].exterior && e > 1)
            return 0;
        out.exponents[i] = e;
        if (vars[i].degree % 2 != 0 && a.exponents[i] != 0)
            inversions += odd_prefix[i];  // odd factors of b strictly before i
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

inline void validate_variables(const VariableList& vars)
{
    for (const Variable& v : vars) {
        if (v.degree <= 0)
            throw std::invalid_argument("variable " + v.name + ": degree must be positive");
        if (v.degree % 2 != 0 && !v.exterior)
            throw std::invalid_argument("variable " + v.name +
                                        ": odd-degree generators must be exterior");
    }
}

/**
 * All monomials of the given degree, in lexicographic order of exponent
 * vectors.  This order is the tie-breaker for every basis choice downstream.
 */
inline std::vector<Monomial> monomials_of_degree(const VariableList& vars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    Monomial current(vars.size());
    // lexicographic ascending: enumerate exponent of variable 0 from 0 upward,
    // recursing on the rest.
    struct Rec
    {
        const VariableList& vars;
        std::vector<Monomial>& out;
        Monomial& current;
        void go(std::size_t idx, int remaining)
        {
            if (idx == vars.size()) {
                if (remaining == 0)
                    out.push_back(current);
                return;
            }
            int max_e = remaining / vars[idx].degree;
            if (vars[idx].exterior)
                max_e = std::min(max_e, 1);
            for (int e = 0; e <= max_e; ++e) {
                current.exponents[idx] = e;
                go(idx + 1, remaining - e * vars[idx].degree);
            }
            current.exponents[idx] = 0;
        }
    } rec{vars, out, current};
    rec.go(0, degree);
    return out;
}

}  // namespace loopcoh

#endif
