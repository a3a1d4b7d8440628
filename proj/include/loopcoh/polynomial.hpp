#ifndef LOOPCOH_POLYNOMIAL_HPP
#define LOOPCOH_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopcoh/fp.hpp"
#include "loopcoh/monomial.hpp"

namespace loopcoh {

/**
 * Sparse polynomial in a graded-commutative variable list.  Terms are kept in
 * a map ordered by monomial, with no zero coefficients.  The variable list is
 * not stored; callers pass it to the operations that need degrees or signs.
 */
template <typename Scalar>
class Poly
{
public:
    using TermMap = std::map<Monomial, Scalar>;

    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly term(const Scalar& c, const Monomial& m)
    {
        Poly p;
        p.add_term(c, m);
        return p;
    }

    static Poly constant(const Scalar& c, std::size_t nvars)
    {
        return term(c, Monomial(nvars));
    }

    static Poly variable(const Scalar& one, std::size_t nvars, std::size_t idx,
                         int exponent = 1)
    {
        Monomial m(nvars);
        m.exponents[idx] = exponent;
        return term(one, m);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Scalar& c, const Monomial& m)
    {
        if (scalar_is_zero(c))
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second))
                terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const
    {
        Poly out = *this;
        for (const auto& [m, c] : o.terms_)
            out.add_term(c, m);
        return out;
    }

    Poly operator-(const Poly& o) const
    {
        Poly out = *this;
        for (const auto& [m, c] : o.terms_)
            out.add_term(-c, m);
        return out;
    }

    Poly operator-() const
    {
        Poly out;
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    Poly scaled(const Scalar& s) const
    {
        Poly out;
        if (scalar_is_zero(s))
            return out;
        for (const auto& [m, c] : terms_)
            out.add_term(c * s, m);
        return out;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Graded product; the variable list supplies parities for the signs.
    Poly multiply(const Poly& o, const VariableList& vars) const
    {
        Poly out;
        Monomial prod;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                int sign = monomial_product(ma, mb, vars, prod);
                if (sign == 0)
                    continue;
                Scalar c = ca * cb;
                out.add_term(sign < 0 ? -c : c, prod);
            }
        }
        return out;
    }

    /// Degree when homogeneous; nullopt for 0 or inhomogeneous input.
    std::optional<int> homogeneous_degree(const VariableList& vars) const
    {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            int d = monomial_degree(m, vars);
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
        return deg;
    }

    std::string render(const VariableList& vars) const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first)
                os << " + ";
            os << c << "*" << monomial_name(m, vars);
            first = false;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

/// Change of coefficient scalar, mapping integer coefficients into a field.
template <typename Scalar>
Poly<Scalar> poly_from_integers(const Poly<long long>& p, const FieldTag& field)
{
    Poly<Scalar> out;
    for (const auto& [m, c] : p.terms())
        out.add_term(scalar_from<Scalar>(c, field), m);
    return out;
}

}  // namespace loopcoh

#endif
