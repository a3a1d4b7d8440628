#ifndef LOOPCOH_QUOTIENT_RING_HPP
#define LOOPCOH_QUOTIENT_RING_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "loopcoh/linalg.hpp"
#include "loopcoh/monomial.hpp"
#include "loopcoh/polynomial.hpp"

namespace loopcoh {

/// Degrees of generators and relations, enough to form the closed-form
/// Poincare series of a complete-intersection presentation.
struct PresentationShape
{
    std::vector<int> polynomial_degrees;
    std::vector<int> exterior_degrees;
    std::vector<int> relation_degrees;
};

/**
 * Graded-commutative polynomial ring over a field, modulo a homogeneous
 * ideal.  Bases are computed degree by degree: the span of the degree-d
 * multiples of the relations is row reduced over the lex-ordered monomials of
 * degree d, and the cokernel basis is the set of non-pivot monomials.
 *
 * Values are immutable after construction and all operations are pure.
 */
template <typename Scalar>
class QuotientRing
{
public:
    QuotientRing(VariableList vars, std::vector<Poly<Scalar>> relations, FieldTag field)
        : vars_(std::move(vars)), relations_(std::move(relations)), field_(field)
    {
        validate_variables(vars_);
        relation_degrees_.reserve(relations_.size());
        for (const auto& rel : relations_) {
            auto d = rel.homogeneous_degree(vars_);
            if (!d)
                throw std::invalid_argument("QuotientRing: relation is not homogeneous");
            relation_degrees_.push_back(*d);
        }
    }

    const VariableList& variables() const { return vars_; }
    const std::vector<Poly<Scalar>>& relations() const { return relations_; }
    const FieldTag& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }

    Scalar make_scalar(long long n) const { return scalar_from<Scalar>(n, field_); }

    Poly<Scalar> var(std::size_t idx, int exponent = 1) const
    {
        return Poly<Scalar>::variable(make_scalar(1), nvars(), idx, exponent);
    }

    Poly<Scalar> unit() const { return Poly<Scalar>::constant(make_scalar(1), nvars()); }

    std::vector<Monomial> degree_monomials(int d) const
    {
        return monomials_of_degree(vars_, d);
    }

    /// Echelon of the ideal's degree-d slice with respect to degree_monomials(d).
    Echelon<Scalar> ideal_span(int d) const
    {
        std::vector<Monomial> mons = degree_monomials(d);
        std::vector<DenseVector<Scalar>> rows;
        Monomial prod;
        for (std::size_t k = 0; k < relations_.size(); ++k) {
            int rel_deg = relation_degrees_[k];
            if (rel_deg > d)
                continue;
            for (const Monomial& m : monomials_of_degree(vars_, d - rel_deg)) {
                DenseVector<Scalar> row =
                    DenseVector<Scalar>::Constant(static_cast<Eigen::Index>(mons.size()), Scalar(0));
                bool nonzero = false;
                for (const auto& [rm, rc] : relations_[k].terms()) {
                    int sign = monomial_product(m, rm, vars_, prod);
                    if (sign == 0)
                        continue;
                    Eigen::Index col = monomial_index(mons, prod);
                    row(col) = row(col) + (sign < 0 ? -rc : rc);
                    nonzero = true;
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }
        }
        DenseMatrix<Scalar> mat(static_cast<Eigen::Index>(rows.size()),
                                static_cast<Eigen::Index>(mons.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            mat.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
        return rref(std::move(mat));
    }

    /**
     * Monomial cosets forming a basis of the ring in degree d.  The
     * complement of the reduced relation span is chosen greedily in monomial
     * order (the non-pivot columns).
     */
    std::vector<Monomial> degree_basis(int d) const
    {
        if (d < 0)
            throw std::invalid_argument("degree_basis: negative degree");
        std::vector<Monomial> mons = degree_monomials(d);
        Echelon<Scalar> span = ideal_span(d);
        std::vector<bool> pivot(mons.size(), false);
        for (Eigen::Index c : span.pivot_cols)
            pivot[static_cast<std::size_t>(c)] = true;
        std::vector<Monomial> basis;
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (!pivot[i])
                basis.push_back(mons[i]);
        return basis;
    }

    long long dim(int d) const { return static_cast<long long>(degree_basis(d).size()); }

    /// Is the homogeneous polynomial P in the ideal?
    bool ideal_membership(const Poly<Scalar>& p) const
    {
        if (p.is_zero())
            return true;
        auto d = p.homogeneous_degree(vars_);
        if (!d)
            throw std::invalid_argument("ideal_membership: inhomogeneous polynomial");
        std::vector<Monomial> mons = degree_monomials(*d);
        Echelon<Scalar> span = ideal_span(*d);
        return in_row_space(span, coefficient_vector(p, mons));
    }

    /// Canonical coset representative: P reduced against the relation span,
    /// supported on the degree basis monomials.
    Poly<Scalar> reduce(const Poly<Scalar>& p) const
    {
        if (p.is_zero())
            return p;
        auto d = p.homogeneous_degree(vars_);
        if (!d)
            throw std::invalid_argument("reduce: inhomogeneous polynomial");
        std::vector<Monomial> mons = degree_monomials(*d);
        Echelon<Scalar> span = ideal_span(*d);
        DenseVector<Scalar> v = reduce_against(span, coefficient_vector(p, mons));
        Poly<Scalar> out;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (!scalar_is_zero(v(i)))
                out.add_term(v(i), mons[static_cast<std::size_t>(i)]);
        return out;
    }

    /// Coset product: graded product reduced in degree |a|+|b|.
    Poly<Scalar> multiply(const Poly<Scalar>& a, const Poly<Scalar>& b) const
    {
        return reduce(a.multiply(b, vars_));
    }

    /// Coordinates of a reduced coset with respect to degree_basis(d).
    DenseVector<Scalar> basis_coordinates(const Poly<Scalar>& reduced_coset,
                                          const std::vector<Monomial>& basis) const
    {
        DenseVector<Scalar> v =
            DenseVector<Scalar>::Constant(static_cast<Eigen::Index>(basis.size()), Scalar(0));
        for (const auto& [m, c] : reduced_coset.terms())
            v(monomial_index(basis, m)) = c;
        return v;
    }

    PresentationShape shape() const
    {
        PresentationShape s;
        for (const Variable& v : vars_)
            (v.exterior ? s.exterior_degrees : s.polynomial_degrees).push_back(v.degree);
        s.relation_degrees = relation_degrees_;
        return s;
    }

private:
    static Eigen::Index monomial_index(const std::vector<Monomial>& mons, const Monomial& m)
    {
        auto it = std::lower_bound(mons.begin(), mons.end(), m);
        if (it == mons.end() || !(*it == m))
            throw std::logic_error("monomial_index: monomial not in list");
        return static_cast<Eigen::Index>(it - mons.begin());
    }

    DenseVector<Scalar> coefficient_vector(const Poly<Scalar>& p,
                                           const std::vector<Monomial>& mons) const
    {
        DenseVector<Scalar> v =
            DenseVector<Scalar>::Constant(static_cast<Eigen::Index>(mons.size()), Scalar(0));
        for (const auto& [m, c] : p.terms())
            v(monomial_index(mons, m)) = c;
        return v;
    }

    VariableList vars_;
    std::vector<Poly<Scalar>> relations_;
    std::vector<int> relation_degrees_;
    FieldTag field_;
};

}  // namespace loopcoh

#endif
