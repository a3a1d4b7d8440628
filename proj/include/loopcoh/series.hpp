#ifndef LOOPCOH_SERIES_HPP
#define LOOPCOH_SERIES_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopcoh/quotient_ring.hpp"

namespace loopcoh {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Integer power series truncated at a cutoff.  Arithmetic is exact and
 * closed under the cutoff; combining two series keeps the smaller cutoff.
 */
class PowerSeries
{
public:
    PowerSeries() : cutoff_(0), c_(1, 0) {}
    explicit PowerSeries(int cutoff) : cutoff_(cutoff), c_(cutoff + 1, 0)
    {
        if (cutoff < 0)
            throw std::invalid_argument("PowerSeries: negative cutoff");
    }

    int cutoff() const { return cutoff_; }
    const BigInt& coeff(int i) const { return c_.at(i); }
    BigInt& coeff(int i) { return c_.at(i); }

    void add_to_coeff(int i, const BigInt& v)
    {
        if (i >= 0 && i <= cutoff_)
            c_[i] += v;
    }

    static PowerSeries one(int cutoff)
    {
        PowerSeries s(cutoff);
        s.c_[0] = 1;
        return s;
    }

    static PowerSeries monomial(int k, int cutoff)
    {
        PowerSeries s(cutoff);
        if (k <= cutoff)
            s.c_[k] = 1;
        return s;
    }

    /// 1/(1-t^k) up to the cutoff.
    static PowerSeries geometric(int k, int cutoff)
    {
        if (k < 1)
            throw std::invalid_argument("geometric: k must be >= 1");
        PowerSeries s(cutoff);
        for (int i = 0; i <= cutoff; i += k)
            s.c_[i] = 1;
        return s;
    }

    PowerSeries operator+(const PowerSeries& o) const
    {
        PowerSeries out(std::min(cutoff_, o.cutoff_));
        for (int i = 0; i <= out.cutoff_; ++i)
            out.c_[i] = c_[i] + o.c_[i];
        return out;
    }

    PowerSeries operator-(const PowerSeries& o) const
    {
        PowerSeries out(std::min(cutoff_, o.cutoff_));
        for (int i = 0; i <= out.cutoff_; ++i)
            out.c_[i] = c_[i] - o.c_[i];
        return out;
    }

    PowerSeries operator*(const PowerSeries& o) const
    {
        PowerSeries out(std::min(cutoff_, o.cutoff_));
        for (int i = 0; i <= out.cutoff_; ++i) {
            if (c_[i] == 0)
                continue;
            for (int j = 0; i + j <= out.cutoff_; ++j)
                out.c_[i + j] += c_[i] * o.c_[j];
        }
        return out;
    }

    /// Multiplication by t^k within the same cutoff.
    PowerSeries shifted(int k) const
    {
        PowerSeries out(cutoff_);
        for (int i = 0; i + k <= cutoff_; ++i)
            if (i + k >= 0)
                out.c_[i + k] = c_[i];
        return out;
    }

    /// Division by t: requires a vanishing constant term.  The cutoff drops
    /// by one since the top coefficient is no longer known.
    PowerSeries divided_by_t() const
    {
        if (c_[0] != 0)
            throw std::domain_error("divided_by_t: nonzero constant term");
        PowerSeries out(cutoff_ > 0 ? cutoff_ - 1 : 0);
        for (int i = 0; i <= out.cutoff_; ++i)
            out.c_[i] = c_[i + 1];
        return out;
    }

    PowerSeries truncated(int new_cutoff) const
    {
        PowerSeries out(std::min(new_cutoff, cutoff_));
        for (int i = 0; i <= out.cutoff_; ++i)
            out.c_[i] = c_[i];
        return out;
    }

    PowerSeries even_part() const
    {
        PowerSeries out(cutoff_);
        for (int i = 0; i <= cutoff_; i += 2)
            out.c_[i] = c_[i];
        return out;
    }

    PowerSeries odd_part() const
    {
        PowerSeries out(cutoff_);
        for (int i = 1; i <= cutoff_; i += 2)
            out.c_[i] = c_[i];
        return out;
    }

    bool is_zero() const
    {
        for (const BigInt& v : c_)
            if (v != 0)
                return false;
        return true;
    }

    /// Coefficientwise equality on the common cutoff.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b)
    {
        int n = std::min(a.cutoff_, b.cutoff_);
        for (int i = 0; i <= n; ++i)
            if (a.c_[i] != b.c_[i])
                return false;
        return true;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    bool dominates(const PowerSeries& o) const
    {
        int n = std::min(cutoff_, o.cutoff_);
        for (int i = 0; i <= n; ++i)
            if (c_[i] < o.c_[i])
                return false;
        return true;
    }

    /// "c0 + c1 t + c2 t^2 + ..." with zero terms skipped.
    std::string render() const
    {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= cutoff_; ++i) {
            if (c_[i] == 0)
                continue;
            if (!first)
                os << " + ";
            os << c_[i];
            if (i == 1)
                os << " t";
            else if (i > 1)
                os << " t^" << i;
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }

    /// Bare coefficients "c0 c1 c2 ..." for CLI expansions.
    std::string render_coefficients() const
    {
        std::ostringstream os;
        for (int i = 0; i <= cutoff_; ++i) {
            if (i)
                os << " ";
            os << c_[i];
        }
        return os.str();
    }

    std::vector<long long> to_int64() const
    {
        std::vector<long long> out;
        out.reserve(c_.size());
        for (const BigInt& v : c_)
            out.push_back(v.convert_to<long long>());
        return out;
    }

private:
    int cutoff_;
    std::vector<BigInt> c_;
};

/**
 * Rational form numerator(t) / prod_k (1-t^k)^{m_k}.  Expansion performs the
 * long division by each factor as a strided prefix sum, which is exact for
 * any numerator.
 */
class RationalSeries
{
public:
    RationalSeries() : num_(1, 1) {}

    explicit RationalSeries(std::vector<BigInt> numerator_coeffs,
                            std::vector<std::pair<int, int>> denominator = {})
        : num_(std::move(numerator_coeffs))
    {
        if (num_.empty())
            num_.assign(1, 0);
        for (auto [k, mult] : denominator)
            multiply_denominator(k, mult);
    }

    static RationalSeries one() { return RationalSeries(); }

    /// (1 - t^k) as a numerator factor.
    RationalSeries& times_one_minus(int k)
    {
        // cancel against the denominator first
        auto it = denom_.find(k);
        if (it != denom_.end()) {
            if (--it->second == 0)
                denom_.erase(it);
            return *this;
        }
        std::vector<BigInt> out(num_.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < num_.size(); ++i) {
            out[i] += num_[i];
            out[i + static_cast<std::size_t>(k)] -= num_[i];
        }
        num_ = std::move(out);
        return *this;
    }

    /// (1 + t^k) as a numerator factor.
    RationalSeries& times_one_plus(int k)
    {
        std::vector<BigInt> out(num_.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < num_.size(); ++i) {
            out[i] += num_[i];
            out[i + static_cast<std::size_t>(k)] += num_[i];
        }
        num_ = std::move(out);
        return *this;
    }

    /// Divide by (1 - t^k)^mult.
    RationalSeries& over_one_minus(int k, int mult = 1)
    {
        multiply_denominator(k, mult);
        return *this;
    }

    RationalSeries& times_monomial(int k)
    {
        num_.insert(num_.begin(), static_cast<std::size_t>(k), BigInt(0));
        return *this;
    }

    RationalSeries& scale(long long c)
    {
        for (BigInt& v : num_)
            v *= c;
        return *this;
    }

    RationalSeries operator*(const RationalSeries& o) const
    {
        RationalSeries out;
        out.num_.assign(num_.size() + o.num_.size() - 1, 0);
        for (std::size_t i = 0; i < num_.size(); ++i)
            for (std::size_t j = 0; j < o.num_.size(); ++j)
                out.num_[i + j] += num_[i] * o.num_[j];
        out.denom_ = denom_;
        for (auto [k, m] : o.denom_)
            out.multiply_denominator(k, m);
        return out;
    }

    PowerSeries expand(int cutoff) const
    {
        PowerSeries s(cutoff);
        for (std::size_t i = 0; i < num_.size() && i <= static_cast<std::size_t>(cutoff); ++i)
            s.coeff(static_cast<int>(i)) = num_[i];
        for (auto [k, mult] : denom_) {
            for (int rep = 0; rep < mult; ++rep) {
                for (int i = k; i <= cutoff; ++i)
                    s.coeff(i) += s.coeff(i - k);
            }
        }
        return s;
    }

    std::string render() const
    {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (std::size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0)
                continue;
            if (!first)
                os << (num_[i] > 0 ? " + " : " - ");
            else if (num_[i] < 0)
                os << "-";
            BigInt a = abs(num_[i]);
            if (a != 1 || i == 0)
                os << a;
            if (i == 1)
                os << "t";
            else if (i > 1)
                os << "t^" << i;
            first = false;
        }
        if (first)
            os << "0";
        os << ")";
        if (!denom_.empty()) {
            os << "/(";
            for (auto it = denom_.begin(); it != denom_.end(); ++it) {
                for (int m = 0; m < it->second; ++m)
                    os << "(1 - t^" << it->first << ")";
            }
            os << ")";
        }
        return os.str();
    }

private:
    void multiply_denominator(int k, int mult)
    {
        if (k < 1)
            throw std::invalid_argument("RationalSeries: denominator factor k must be >= 1");
        if (mult != 0)
            denom_[k] += mult;
    }

    std::vector<BigInt> num_;   // numerator coefficients, index = exponent
    std::map<int, int> denom_;  // k -> multiplicity of (1 - t^k)
};

/// Closed-form Poincare series of a complete-intersection presentation.
inline RationalSeries presentation_series(const PresentationShape& shape)
{
    RationalSeries s;
    for (int d : shape.relation_degrees)
        s.times_one_minus(d);
    for (int e : shape.exterior_degrees)
        s.times_one_plus(e);
    for (int d : shape.polynomial_degrees)
        s.over_one_minus(d);
    return s;
}

/// Poincare series of a quotient ring measured degree by degree.
template <typename Scalar>
PowerSeries ring_series_by_basis(const QuotientRing<Scalar>& ring, int cutoff)
{
    PowerSeries s(cutoff);
    for (int d = 0; d <= cutoff; ++d)
        s.coeff(d) = ring.dim(d);
    return s;
}

}  // namespace loopcoh

#include "loopcoh/index_sets.hpp"

namespace loopcoh {

/// Indicator series of an index set: coefficient of t^n is 1 iff n is a member.
inline PowerSeries series_of_index_set(const IndexSetSpec& spec, int cutoff)
{
    PowerSeries s(cutoff);
    for (long long k = 1; k <= cutoff; ++k)
        if (index_set_membership(spec, k))
            s.coeff(static_cast<int>(k)) = 1;
    return s;
}

}  // namespace loopcoh

#endif
