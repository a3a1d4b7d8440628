#include "loopcoh/loop_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopcoh {

long long binomial_mod_p(long long n, long long k, long long p)
{
    if (k < 0 || k > n)
        return 0;
    long long result = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd)
            return 0;
        // C(nd, kd) mod p with nd, kd < p
        long long num = 1, den = 1;
        for (long long t = 0; t < kd; ++t) {
            num = (num * ((nd - t) % p)) % p;
            den = (den * ((t + 1) % p)) % p;
        }
        result = (result * num) % p * Fp(den, p).inverse().value() % p;
        n /= p;
        k /= p;
    }
    return result;
}

LoopAlgebraModel LoopAlgebraModel::build(const TruncSpaceParams& params, int cutoff)
{
    LoopAlgebraModel model(params, cutoff);
    model.basis_by_degree_.assign(cutoff + 1, {});
    const int r = params.r;
    const int alpha = params.alpha;
    const long long rho = params.rho();

    if (params.divisible()) {
        for (long long i = 0; rho * i <= cutoff; ++i)
            for (int j = 0; j <= r; ++j)
                for (int eps = 0; eps <= 1; ++eps) {
                    long long d = rho * i + static_cast<long long>(alpha) * j +
                                  static_cast<long long>(alpha - 1) * eps;
                    if (d <= cutoff) {
                        LoopBasisElem e;
                        e.j = j;
                        e.eps = eps;
                        e.i = i;
                        model.basis_by_degree_[d].push_back(e);
                    }
                }
    } else {
        LoopBasisElem unit;
        unit.is_unit = true;
        model.basis_by_degree_[0].push_back(unit);
        for (long long i = 0; rho * i <= cutoff; ++i)
            for (int j = 1; j <= r; ++j)
                for (char typ : {'a', 'b'}) {
                    long long d = rho * i + static_cast<long long>(alpha) * j -
                                  (typ == 'a' ? 1 : 0);
                    if (d <= cutoff) {
                        LoopBasisElem e;
                        e.is_unit = false;
                        e.typ = typ;
                        e.i = i;
                        e.j = j;
                        model.basis_by_degree_[d].push_back(e);
                    }
                }
    }
    return model;
}

const std::vector<LoopBasisElem>& LoopAlgebraModel::basis(int degree) const
{
    static const std::vector<LoopBasisElem> empty;
    if (degree < 0 || degree > cutoff_)
        return empty;
    return basis_by_degree_[degree];
}

long long LoopAlgebraModel::degree_of(const LoopBasisElem& e) const
{
    const long long rho = params_.rho();
    const int alpha = params_.alpha;
    if (divisible())
        return rho * e.i + static_cast<long long>(alpha) * e.j +
               static_cast<long long>(alpha - 1) * e.eps;
    if (e.is_unit)
        return 0;
    return rho * e.i + static_cast<long long>(alpha) * e.j - (e.typ == 'a' ? 1 : 0);
}

std::string LoopAlgebraModel::name_of(const LoopBasisElem& e) const
{
    if (divisible()) {
        std::string s;
        if (e.j > 0)
            s += "x^" + std::to_string(e.j);
        if (e.eps)
            s += (s.empty() ? "" : "*") + std::string("dx");
        if (e.i > 0)
            s += (s.empty() ? "" : "*") + ("g_" + std::to_string(e.i) + "(w)");
        return s.empty() ? "1" : s;
    }
    if (e.is_unit)
        return "1";
    std::string s;
    if (e.j > 1)
        s = "b0^" + std::to_string(e.j - 1) + "*";
    s += std::string(1, e.typ) + "_" + std::to_string(e.i);
    return s;
}

std::pair<Fp, std::optional<LoopBasisElem>> LoopAlgebraModel::product(
    const LoopBasisElem& a, const LoopBasisElem& b) const
{
    const long long p = params_.p;
    const Fp zero(0, p);
    if (divisible()) {
        if (a.j + b.j > params_.r || a.eps + b.eps > 1)
            return {zero, std::nullopt};
        LoopBasisElem out;
        out.j = a.j + b.j;
        out.eps = a.eps + b.eps;
        out.i = a.i + b.i;
        Fp c(binomial_mod_p(a.i + b.i, a.i, p), p);
        if (c.is_zero())
            return {zero, std::nullopt};
        return {c, out};
    }
    if (a.is_unit)
        return {Fp(1, p), b};
    if (b.is_unit)
        return {Fp(1, p), a};
    if (a.typ == 'a' && b.typ == 'a')
        return {zero, std::nullopt};  // a_i a_j = 0
    if (a.j + b.j > params_.r)
        return {zero, std::nullopt};  // lands in b_0^r (a|b)_i = 0
    LoopBasisElem out;
    out.is_unit = false;
    out.typ = (a.typ == 'a' || b.typ == 'a') ? 'a' : 'b';
    out.i = a.i + b.i;
    out.j = a.j + b.j;
    Fp c(binomial_mod_p(a.i + b.i, a.i, p), p);
    if (c.is_zero())
        return {zero, std::nullopt};
    return {c, out};
}

std::pair<Fp, std::optional<LoopBasisElem>> LoopAlgebraModel::differential(
    const LoopBasisElem& e) const
{
    const long long p = params_.p;
    const Fp zero(0, p);
    if (divisible()) {
        // d(x^j gamma_i) = j x^{j-1} dx gamma_i, d kills dx and gamma_i
        if (e.eps == 1 || e.j == 0)
            return {zero, std::nullopt};
        Fp c(e.j, p);
        if (c.is_zero())
            return {zero, std::nullopt};
        LoopBasisElem out = e;
        out.j -= 1;
        out.eps = 1;
        return {c, out};
    }
    if (e.is_unit || e.typ == 'a')
        return {zero, std::nullopt};  // kappa_i = 0 throughout
    // d(b_0^{j-1} b_i) = ((r+1)i + j) b_0^{j-1} a_i
    Fp c(static_cast<long long>(params_.r + 1) * e.i + e.j, p);
    if (c.is_zero())
        return {zero, std::nullopt};
    LoopBasisElem out = e;
    out.typ = 'a';
    return {c, out};
}

PrimeFieldMatrix LoopAlgebraModel::action_matrix(int degree) const
{
    const auto& src = basis(degree);
    const auto& dst = basis(degree - 1);
    PrimeFieldMatrix m = PrimeFieldMatrix::Constant(
        static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()),
        Fp(0, params_.p));
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [coeff, target] = differential(src[c]);
        if (!target)
            continue;
        auto it = std::find(dst.begin(), dst.end(), *target);
        if (it == dst.end())
            throw std::logic_error("action_matrix: differential left the basis");
        m(static_cast<Eigen::Index>(it - dst.begin()), static_cast<Eigen::Index>(c)) = coeff;
    }
    return m;
}

PowerSeries LoopAlgebraModel::series(int upto) const
{
    PowerSeries s(std::min(upto, cutoff_));
    for (int d = 0; d <= s.cutoff(); ++d)
        s.coeff(d) = dim(d);
    return s;
}

bool product_confluence_check(const LoopAlgebraModel& model, int degree_limit)
{
    std::vector<LoopBasisElem> elems;
    for (int d = 0; d <= degree_limit; ++d)
        for (const auto& e : model.basis(d))
            elems.push_back(e);

    auto prod3_left = [&](const LoopBasisElem& a, const LoopBasisElem& b,
                          const LoopBasisElem& c) -> std::pair<Fp, std::optional<LoopBasisElem>> {
        auto [cab, ab] = model.product(a, b);
        if (!ab)
            return {cab, std::nullopt};
        auto [cf, abc] = model.product(*ab, c);
        return {cab * cf, abc};
    };
    auto prod3_right = [&](const LoopBasisElem& a, const LoopBasisElem& b,
                           const LoopBasisElem& c) -> std::pair<Fp, std::optional<LoopBasisElem>> {
        auto [cbc, bc] = model.product(b, c);
        if (!bc)
            return {cbc, std::nullopt};
        auto [cf, abc] = model.product(a, *bc);
        return {cbc * cf, abc};
    };

    for (const auto& a : elems)
        for (const auto& b : elems) {
            // graded commutativity
            auto [cab, ab] = model.product(a, b);
            auto [cba, ba] = model.product(b, a);
            bool both_odd = (model.degree_of(a) % 2 != 0) && (model.degree_of(b) % 2 != 0);
            Fp expected = both_odd ? -cba : cba;
            if (!(cab == expected) || ab.has_value() != ba.has_value())
                return false;
            if (ab && !(*ab == *ba))
                return false;
            if (model.degree_of(a) + model.degree_of(b) > degree_limit)
                continue;
            for (const auto& c : elems) {
                auto [cl, left] = prod3_left(a, b, c);
                auto [cr, right] = prod3_right(a, b, c);
                bool lz = !left || cl.is_zero();
                bool rz = !right || cr.is_zero();
                if (lz != rz)
                    return false;
                if (!lz && (!(cl == cr) || !(*left == *right)))
                    return false;
            }
        }
    return true;
}

ActionCounts action_counts(const LoopAlgebraModel& model, long long k)
{
    if (k < 1)
        throw std::invalid_argument("action_counts: k must be >= 1");
    int deg = static_cast<int>(2 * k);
    PrimeFieldMatrix m = model.action_matrix(deg);
    long long rank = matrix_rank(m);
    ActionCounts c;
    c.kernel = model.dim(deg) - rank;
    c.image = rank;
    c.cokernel = model.dim(deg - 1) - rank;
    return c;
}

ActionCounts action_counts_predicted(const TruncSpaceParams& params, long long k)
{
    ActionCounts c;
    long long deg = 2 * k;
    bool in_if = index_set_membership(make_IF(params), deg);
    bool in_it = index_set_membership(make_IT(params), deg);
    c.kernel = in_if ? 1 : 0;
    c.image = in_it ? 1 : 0;
    if (!params.divisible()) {
        c.cokernel = in_if ? 1 : 0;
    } else {
        long long rho = params.rho();
        bool coker = (in_if && deg % rho != 0) || (k > 1 && (deg - 2) % rho == 0);
        c.cokernel = coker ? 1 : 0;
    }
    return c;
}

PowerSeries GradedUModule::poincare() const
{
    PowerSeries s(static_cast<int>(cutoff));
    for (long long f : free_degrees)
        for (long long d = f; d <= cutoff; d += 2)
            s.coeff(static_cast<int>(d)) += 1;
    for (long long t : torsion_degrees)
        s.add_to_coeff(static_cast<int>(t), 1);
    return s;
}

GradedUModule main_module(int r, long long p, int cutoff)
{
    TruncSpaceParams params(r, p, 2);
    GradedUModule m;
    m.cutoff = cutoff;
    m.free_degrees.push_back(0);
    for (long long deg = 2; deg <= cutoff + 1; deg += 2) {
        if (deg <= cutoff && index_set_membership(make_IF(params), deg))
            m.free_degrees.push_back(deg);
        if (index_set_membership(make_IFprime(params), deg) && deg - 1 <= cutoff)
            m.free_degrees.push_back(deg - 1);
        if (index_set_membership(make_IT(params), deg) && deg - 1 <= cutoff)
            m.torsion_degrees.push_back(deg - 1);
    }
    std::sort(m.free_degrees.begin(), m.free_degrees.end());
    std::sort(m.torsion_degrees.begin(), m.torsion_degrees.end());
    return m;
}

PowerSeries main_poincare(int r, long long p, int cutoff)
{
    TruncSpaceParams params(r, p, 2);
    PowerSeries numerators = series_of_index_set(make_IF(params), cutoff);
    numerators.coeff(0) = 1;
    return numerators * PowerSeries::geometric(1, cutoff);
}

std::string main_poincare_closed_form(int r, long long p)
{
    std::string s = "(1 + sum_{k in IF(" + std::to_string(r) + "," + std::to_string(p) +
                    ",2)} t^k) / (1 - t)";
    if ((r + 1) % p == 0) {
        RationalSeries closed;
        closed.times_one_minus(2 * (r + 1))
            .over_one_minus(1)
            .over_one_minus(2 * r)
            .over_one_minus(static_cast<int>(2 * p));
        s += "  =  " + closed.render();
    }
    return s;
}

RationalLoopModel rational_loop_model(int r, int alpha, int cutoff)
{
    if (alpha < 2 || alpha % 2 != 0)
        throw std::invalid_argument("rational_loop_model: alpha must be even");
    RationalLoopModel m;
    m.r = r;
    m.alpha = alpha;
    m.dims.assign(cutoff + 1, 0);
    m.d_is_iso.assign(cutoff + 1, false);
    long long rho = static_cast<long long>(r + 1) * alpha - 2;
    m.dims[0] = 1;
    for (long long i = 0; rho * i <= cutoff; ++i)
        for (int j = 1; j <= r; ++j) {
            long long k = rho * i + static_cast<long long>(alpha) * j;
            if (k <= cutoff) {
                if (m.dims[static_cast<std::size_t>(k)] != 0)
                    throw std::logic_error("rational_loop_model: degree collision");
                m.dims[static_cast<std::size_t>(k)] = 1;
                m.d_is_iso[static_cast<std::size_t>(k)] = true;
            }
            if (k - 1 <= cutoff) {
                if (m.dims[static_cast<std::size_t>(k - 1)] != 0)
                    throw std::logic_error("rational_loop_model: degree collision");
                m.dims[static_cast<std::size_t>(k - 1)] = 1;
            }
        }
    return m;
}

PowerSeries rational_borel_series(int r, int alpha, int cutoff)
{
    PowerSeries s = PowerSeries::geometric(2, cutoff);
    long long rho = static_cast<long long>(r + 1) * alpha - 2;
    for (long long i = 0; rho * i <= cutoff; ++i)
        for (int j = 1; j <= r; ++j)
            s.add_to_coeff(static_cast<int>(rho * i + static_cast<long long>(alpha) * j - 1), 1);
    return s;
}

PowerSeries rational_borel_series_by_rank(int r, int alpha, int cutoff)
{
    RationalLoopModel m = rational_loop_model(r, alpha, cutoff + 1);
    // E_3 = im(d) in filtration 0 plus Q[u] tensor H(d)
    PowerSeries s(cutoff);
    for (int t = 0; t <= cutoff; ++t) {
        int ker = m.dims[t] - (m.d_is_iso[t] ? 1 : 0);
        int im_into_t = (t + 1 <= cutoff + 1 && m.d_is_iso[t + 1]) ? 1 : 0;
        int homology = ker - im_into_t;
        // filtration 0 carries ker(d); higher even filtrations carry H(d)
        s.add_to_coeff(t, ker);
        for (int a = 1; t + 2 * a <= cutoff; ++a)
            s.add_to_coeff(t + 2 * a, homology);
    }
    return s;
}

}  // namespace loopcoh
