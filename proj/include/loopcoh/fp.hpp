#ifndef LOOPCOH_FP_HPP
#define LOOPCOH_FP_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace loopcoh {

/// Exact rational scalar, used wherever a computation runs over Q.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/**
 * Coefficient field of a computation: either F_p for a prime p, or Q.
 * Primality is checked at construction by trial division.
 */
struct FieldTag
{
    enum class Kind { PrimeField, Rationals };

    Kind kind;
    long long p;  // modulus, only meaningful for PrimeField

    static FieldTag prime_field(long long p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("FieldTag: " + std::to_string(p) + " is not prime");
        return FieldTag{Kind::PrimeField, p};
    }

    static FieldTag rationals() { return FieldTag{Kind::Rationals, 0}; }

    bool operator==(const FieldTag& other) const
    {
        return kind == other.kind && p == other.p;
    }

    std::string name() const
    {
        return kind == Kind::Rationals ? "Q" : "F_" + std::to_string(p);
    }
};

/**
 * Element of a prime field F_p with the modulus carried in the value.
 *
 * A default-constructed or integer-constructed element has modulus 0 and
 * behaves as a plain integer literal; it acquires the modulus of the first
 * modular operand it is combined with.  This is what lets Eigen expressions
 * such as products, which internally create Scalar(0) accumulators, work on
 * matrices over a runtime modulus.  Comparisons between two literals compare
 * the raw integers, so literal use should stay within small constants.
 */
class Fp
{
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long n) : v_(n), p_(0) {}
    Fp(int n) : v_(n), p_(0) {}
    Fp(long long n, long long p) : p_(p)
    {
        v_ = n % p;
        if (v_ < 0)
            v_ += p;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_literal() const { return p_ == 0; }

    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b)
    {
        long long p = combine(a, b);
        return p == 0 ? Fp(a.v_ + b.v_) : Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        long long p = combine(a, b);
        return p == 0 ? Fp(a.v_ - b.v_) : Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        long long p = combine(a, b);
        return p == 0 ? Fp(a.v_ * b.v_) : Fp(a.v_ * b.v_, p);
    }
    Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(-v_, p_); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    Fp inverse() const
    {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1)
                return *this;
            throw std::domain_error("Fp: inverse of a plain integer");
        }
        if (v_ == 0)
            throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, p_);
    }

    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b)
    {
        long long p = combine(a, b);
        if (p == 0)
            return a.v_ == b.v_;
        long long av = a.v_ % p, bv = b.v_ % p;
        if (av < 0)
            av += p;
        if (bv < 0)
            bv += p;
        return av == bv;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a)
    {
        return os << a.v_;
    }

private:
    static long long combine(const Fp& a, const Fp& b)
    {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::logic_error("Fp: modulus mismatch");
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    long long v_;
    long long p_;
};

/// Templated zero/one helpers so generic code works for Fp and Rational alike.
template <typename Scalar>
inline Scalar scalar_from(long long n, const FieldTag& field);

template <>
inline Fp scalar_from<Fp>(long long n, const FieldTag& field)
{
    return Fp(n, field.p);
}

template <>
inline Rational scalar_from<Rational>(long long n, const FieldTag&)
{
    return Rational(n);
}

template <typename Scalar>
inline bool scalar_is_zero(const Scalar& x)
{
    return x == Scalar(0);
}

}  // namespace loopcoh

namespace Eigen {

template <>
struct NumTraits<loopcoh::Fp> : NumTraits<long long>
{
    typedef loopcoh::Fp Real;
    typedef loopcoh::Fp NonInteger;
    typedef loopcoh::Fp Nested;
    typedef loopcoh::Fp Literal;

    enum
    {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
};

}  // namespace Eigen

#endif
