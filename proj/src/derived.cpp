#include "loopcoh/derived.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopcoh {

namespace {

VariableList level_variables(const DerivedParams& par, int q)
{
    VariableList vars;
    vars.push_back({"x", par.alpha, false});
    for (int j = 1; j <= q; ++j)
        vars.push_back({"y" + std::to_string(j), par.y_degree(), false});
    vars.push_back({"dx", par.alpha - 1, true});
    for (int j = 1; j <= q; ++j)
        vars.push_back({"dy" + std::to_string(j), par.dy_degree(), true});
    return vars;
}

}  // namespace

Eigen::Index ResolutionLevel::index_of(int n, const Monomial& m) const
{
    const auto& mons = basis.at(n);
    auto it = std::lower_bound(mons.begin(), mons.end(), m);
    if (it == mons.end() || !(*it == m))
        throw std::logic_error("ResolutionLevel: monomial outside basis");
    return static_cast<Eigen::Index>(it - mons.begin());
}

SimplicialOmega::SimplicialOmega(const DerivedParams& params, int max_level,
                                 int internal_cutoff)
    : params_(params), max_level_(max_level), cutoff_(internal_cutoff)
{
    if (!is_prime(params.p))
        throw std::invalid_argument("SimplicialOmega: p must be prime");
    if (params.alpha < 2 || params.alpha % 2 != 0)
        throw std::invalid_argument("SimplicialOmega: alpha must be even");
    if (internal_cutoff < params.y_degree()) {
        // faces still make sense, but d_0(y_1) = x^{r+1} would leave the
        // window; keep the window generous instead of special-casing
        throw std::invalid_argument("SimplicialOmega: cutoff below (r+1)alpha");
    }
    levels_.reserve(max_level + 1);
    for (int q = 0; q <= max_level; ++q) {
        ResolutionLevel lvl;
        lvl.q = q;
        lvl.vars = level_variables(params, q);
        lvl.basis.resize(internal_cutoff + 1);
        for (int n = 0; n <= internal_cutoff; ++n)
            lvl.basis[n] = monomials_of_degree(lvl.vars, n);
        levels_.push_back(std::move(lvl));
    }
}

std::vector<Poly<Fp>> SimplicialOmega::face_images(int q, int i) const
{
    const ResolutionLevel& src = level(q);
    const ResolutionLevel& dst = level(q - 1);
    const long long p = params_.p;
    const std::size_t nv = dst.vars.size();
    const Fp one(1, p);

    std::vector<Poly<Fp>> images(src.vars.size());
    images[src.x_index()] = Poly<Fp>::variable(one, nv, dst.x_index());
    images[src.dx_index()] = Poly<Fp>::variable(one, nv, dst.dx_index());
    for (int j = 1; j <= q; ++j) {
        Poly<Fp> y_img, dy_img;
        if (i == 0 && j == 1) {
            y_img = Poly<Fp>::variable(one, nv, dst.x_index(), params_.r + 1);
            // d y_1 -> d(x^{r+1}) = (r+1) x^r dx
            Monomial m(nv);
            m.exponents[dst.x_index()] = params_.r;
            m.exponents[dst.dx_index()] = 1;
            dy_img = Poly<Fp>::term(Fp(params_.r + 1, p), m);
        } else if (i < j && j > 1) {
            y_img = Poly<Fp>::variable(one, nv, dst.y_index(j - 1));
            dy_img = Poly<Fp>::variable(one, nv, dst.dy_index(j - 1));
        } else if (i >= j && j < q) {
            y_img = Poly<Fp>::variable(one, nv, dst.y_index(j));
            dy_img = Poly<Fp>::variable(one, nv, dst.dy_index(j));
        } else {
            // i == q, j == q
            y_img = Poly<Fp>::zero();
            dy_img = Poly<Fp>::zero();
        }
        images[src.y_index(j)] = std::move(y_img);
        images[src.dy_index(j)] = std::move(dy_img);
    }
    return images;
}

std::vector<Poly<Fp>> SimplicialOmega::degeneracy_images(int q, int i) const
{
    const ResolutionLevel& src = level(q);
    const ResolutionLevel& dst = level(q + 1);
    const long long p = params_.p;
    const std::size_t nv = dst.vars.size();
    const Fp one(1, p);

    std::vector<Poly<Fp>> images(src.vars.size());
    images[src.x_index()] = Poly<Fp>::variable(one, nv, dst.x_index());
    images[src.dx_index()] = Poly<Fp>::variable(one, nv, dst.dx_index());
    for (int j = 1; j <= q; ++j) {
        int target = (i >= j) ? j : j + 1;
        images[src.y_index(j)] = Poly<Fp>::variable(one, nv, dst.y_index(target));
        images[src.dy_index(j)] = Poly<Fp>::variable(one, nv, dst.dy_index(target));
    }
    return images;
}

Poly<Fp> SimplicialOmega::apply_map(const Poly<Fp>& v, const std::vector<Poly<Fp>>& images,
                                    const VariableList& target_vars) const
{
    Poly<Fp> out;
    for (const auto& [mon, coeff] : v.terms()) {
        Poly<Fp> acc = Poly<Fp>::constant(coeff, target_vars.size());
        for (std::size_t idx = 0; idx < mon.exponents.size() && !acc.is_zero(); ++idx) {
            for (int e = 0; e < mon.exponents[idx]; ++e)
                acc = acc.multiply(images[idx], target_vars);
        }
        out = out + acc;
    }
    return out;
}

Poly<Fp> SimplicialOmega::face(int q, int i, const Poly<Fp>& v) const
{
    if (q < 1 || q > max_level_ || i < 0 || i > q)
        throw std::invalid_argument("face: bad (q, i)");
    return apply_map(v, face_images(q, i), level(q - 1).vars);
}

Poly<Fp> SimplicialOmega::degeneracy(int q, int i, const Poly<Fp>& v) const
{
    if (q < 0 || q + 1 > max_level_ || i < 0 || i > q)
        throw std::invalid_argument("degeneracy: bad (q, i)");
    return apply_map(v, degeneracy_images(q, i), level(q + 1).vars);
}

Poly<Fp> SimplicialOmega::theta(int q, const Poly<Fp>& v) const
{
    const ResolutionLevel& lvl = level(q);
    const long long p = params_.p;
    Poly<Fp> out;
    for (const auto& [mon, coeff] : v.terms()) {
        int position = 0;  // 1-based position within the exterior block
        for (int j = 0; j <= q; ++j) {
            int idx = (j == 0) ? lvl.dx_index() : lvl.dy_index(j);
            if (mon.exponents[idx] == 0)
                continue;
            ++position;
            Monomial m = mon;
            m.exponents[idx] = 0;
            Fp c = coeff;
            if (j == 0) {
                m.exponents[lvl.x_index()] += 1;  // theta(dx) = x
            } else {
                m.exponents[lvl.y_index(j)] += 1;  // theta(dy_j) = (r+1) y_j
                c = c * Fp(params_.r + 1, p);
            }
            if (position % 2 == 0)
                c = -c;
            out.add_term(c, m);
        }
    }
    return out;
}

Poly<Fp> SimplicialOmega::derham(int q, const Poly<Fp>& v) const
{
    const ResolutionLevel& lvl = level(q);
    Poly<Fp> out;
    for (const auto& [mon, coeff] : v.terms()) {
        for (int j = 0; j <= q; ++j) {
            int idx = (j == 0) ? lvl.x_index() : lvl.y_index(j);
            int d_idx = (j == 0) ? lvl.dx_index() : lvl.dy_index(j);
            int e = mon.exponents[idx];
            if (e == 0 || mon.exponents[d_idx] != 0)
                continue;
            Monomial m = mon;
            m.exponents[idx] = e - 1;
            m.exponents[d_idx] = 1;
            // Koszul sign: the created odd factor moves past the exterior
            // factors that precede its slot
            int crossings = 0;
            for (int k = 0; k <= q; ++k) {
                int other = (k == 0) ? lvl.dx_index() : lvl.dy_index(k);
                if (other < d_idx && mon.exponents[other] != 0)
                    ++crossings;
            }
            Fp c = coeff * Fp(e, params_.p);
            if (crossings % 2 != 0)
                c = -c;
            out.add_term(c, m);
        }
    }
    return out;
}

PrimeFieldMatrix SimplicialOmega::face_matrix(int q, int i, int n) const
{
    const ResolutionLevel& src = level(q);
    const ResolutionLevel& dst = level(q - 1);
    PrimeFieldMatrix m = PrimeFieldMatrix::Constant(dst.dim(n), src.dim(n), Fp(0, params_.p));
    auto images = face_images(q, i);
    for (Eigen::Index c = 0; c < src.dim(n); ++c) {
        Poly<Fp> img = apply_map(Poly<Fp>::term(Fp(1, params_.p), src.basis[n][c]),
                                 images, dst.vars);
        for (const auto& [mon, coeff] : img.terms())
            m(dst.index_of(n, mon), c) = coeff;
    }
    return m;
}

PrimeFieldMatrix SimplicialOmega::degeneracy_matrix(int q, int i, int n) const
{
    const ResolutionLevel& src = level(q);
    const ResolutionLevel& dst = level(q + 1);
    PrimeFieldMatrix m = PrimeFieldMatrix::Constant(dst.dim(n), src.dim(n), Fp(0, params_.p));
    auto images = degeneracy_images(q, i);
    for (Eigen::Index c = 0; c < src.dim(n); ++c) {
        Poly<Fp> img = apply_map(Poly<Fp>::term(Fp(1, params_.p), src.basis[n][c]),
                                 images, dst.vars);
        for (const auto& [mon, coeff] : img.terms())
            m(dst.index_of(n, mon), c) = coeff;
    }
    return m;
}

PrimeFieldMatrix SimplicialOmega::theta_matrix(int q, int n) const
{
    const ResolutionLevel& lvl = level(q);
    PrimeFieldMatrix m =
        PrimeFieldMatrix::Constant(lvl.dim(n + 1), lvl.dim(n), Fp(0, params_.p));
    for (Eigen::Index c = 0; c < lvl.dim(n); ++c) {
        Poly<Fp> img = theta(q, Poly<Fp>::term(Fp(1, params_.p), lvl.basis[n][c]));
        for (const auto& [mon, coeff] : img.terms())
            m(lvl.index_of(n + 1, mon), c) = coeff;
    }
    return m;
}

PrimeFieldMatrix SimplicialOmega::normalized_basis(int q, int n) const
{
    const ResolutionLevel& lvl = level(q);
    if (q == 0) {
        PrimeFieldMatrix id = PrimeFieldMatrix::Constant(lvl.dim(n), lvl.dim(n), Fp(0, params_.p));
        for (Eigen::Index i = 0; i < lvl.dim(n); ++i)
            id(i, i) = Fp(1, params_.p);
        return id;
    }
    Eigen::Index rows = 0;
    std::vector<PrimeFieldMatrix> faces;
    for (int j = 1; j <= q; ++j) {
        faces.push_back(face_matrix(q, j, n));
        rows += faces.back().rows();
    }
    PrimeFieldMatrix stacked = PrimeFieldMatrix::Constant(rows, lvl.dim(n), Fp(0, params_.p));
    Eigen::Index at = 0;
    for (const auto& f : faces) {
        stacked.middleRows(at, f.rows()) = f;
        at += f.rows();
    }
    auto kern = kernel_basis(stacked);
    PrimeFieldMatrix out = PrimeFieldMatrix::Constant(
        lvl.dim(n), static_cast<Eigen::Index>(kern.size()), Fp(0, params_.p));
    for (std::size_t c = 0; c < kern.size(); ++c)
        out.col(static_cast<Eigen::Index>(c)) = kern[c];
    return out;
}

PrimeFieldMatrix SimplicialOmega::unnormalized_boundary(int q, int n) const
{
    const ResolutionLevel& src = level(q);
    const ResolutionLevel& dst = level(q - 1);
    PrimeFieldMatrix m = PrimeFieldMatrix::Constant(dst.dim(n), src.dim(n), Fp(0, params_.p));
    for (int j = 0; j <= q; ++j) {
        PrimeFieldMatrix f = face_matrix(q, j, n);
        if (j % 2 == 0) {
            for (Eigen::Index a = 0; a < m.rows(); ++a)
                for (Eigen::Index b = 0; b < m.cols(); ++b)
                    m(a, b) = m(a, b) + f(a, b);
        } else {
            for (Eigen::Index a = 0; a < m.rows(); ++a)
                for (Eigen::Index b = 0; b < m.cols(); ++b)
                    m(a, b) = m(a, b) - f(a, b);
        }
    }
    return m;
}

PrimeFieldVector SimplicialOmega::coords(int q, int n, const Poly<Fp>& v) const
{
    const ResolutionLevel& lvl = level(q);
    PrimeFieldVector out = PrimeFieldVector::Constant(lvl.dim(n), Fp(0, params_.p));
    for (const auto& [mon, coeff] : v.terms())
        out(lvl.index_of(n, mon)) = coeff;
    return out;
}

Poly<Fp> SimplicialOmega::from_coords(int q, int n, const PrimeFieldVector& v) const
{
    const ResolutionLevel& lvl = level(q);
    Poly<Fp> out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!scalar_is_zero(v(i)))
            out.add_term(v(i), lvl.basis[n][i]);
    return out;
}

Poly<Fp> SimplicialOmega::omega_elem(int i) const
{
    const ResolutionLevel& lvl = level(i);
    Monomial m(lvl.vars.size());
    for (int j = 1; j <= i; ++j)
        m.exponents[lvl.dy_index(j)] = 1;
    return Poly<Fp>::term(Fp(1, params_.p), m);
}

Poly<Fp> SimplicialOmega::alpha_elem(int i) const
{
    const ResolutionLevel& lvl = level(i);
    Monomial m(lvl.vars.size());
    m.exponents[lvl.dx_index()] = 1;
    for (int j = 1; j <= i; ++j)
        m.exponents[lvl.dy_index(j)] = 1;
    return Poly<Fp>::term(Fp(1, params_.p), m);
}

Poly<Fp> SimplicialOmega::beta_elem(int i) const
{
    return theta(i, alpha_elem(i));
}

Poly<Fp> SimplicialOmega::x_power(int q, int exponent) const
{
    const ResolutionLevel& lvl = level(q);
    return Poly<Fp>::variable(Fp(1, params_.p), lvl.vars.size(), lvl.x_index(), exponent);
}

Poly<Fp> SimplicialOmega::shuffle_product(int i, const Poly<Fp>& u, int j,
                                          const Poly<Fp>& v) const
{
    if (i + j > max_level_)
        throw std::invalid_argument("shuffle_product: level overflow");
    if (i == 0 && j == 0)
        return u.multiply(v, level(0).vars);

    // enumerate (i,j)-shuffles: mu = positions for the first factor
    std::vector<int> mu(i);
    for (int k = 0; k < i; ++k)
        mu[k] = k;
    const int total = i + j;
    Poly<Fp> out;

    auto emit = [&]() {
        std::vector<int> nu;
        std::vector<bool> in_mu(total, false);
        for (int k : mu)
            in_mu[k] = true;
        for (int k = 0; k < total; ++k)
            if (!in_mu[k])
                nu.push_back(k);
        long long sign_exp = 0;
        for (int k = 0; k < i; ++k)
            sign_exp += mu[k] - k;
        // s_nu(u): apply the listed degeneracies in increasing index order
        Poly<Fp> su = u;
        int lu = i;
        for (int s : nu) {
            su = degeneracy(lu, s, su);
            ++lu;
        }
        Poly<Fp> sv = v;
        int lv = j;
        for (int s : mu) {
            sv = degeneracy(lv, s, sv);
            ++lv;
        }
        Poly<Fp> term = su.multiply(sv, level(total).vars);
        if (sign_exp % 2 != 0)
            term = -term;
        out = out + term;
    };

    if (i == 0) {
        emit();  // single shuffle with mu empty
    } else {
        while (true) {
            emit();
            // next combination
            int k = i - 1;
            while (k >= 0 && mu[k] == total - i + k)
                --k;
            if (k < 0)
                break;
            ++mu[k];
            for (int t = k + 1; t < i; ++t)
                mu[t] = mu[t - 1] + 1;
        }
    }
    return out;
}

long long derived_closed_form_dim(const DerivedParams& par, int i, int n)
{
    const int alpha = par.alpha;
    const int r = par.r;
    const int dy = par.dy_degree();
    bool divisible = (r + 1) % par.p == 0;
    long long count = 0;
    if (divisible) {
        // basis x^j (dx)^eps gamma_i at internal degree i*dy + j*alpha + eps*(alpha-1)
        for (int jj = 0; jj <= r; ++jj)
            for (int eps = 0; eps <= 1; ++eps)
                if (static_cast<long long>(i) * dy + jj * alpha + eps * (alpha - 1) == n)
                    ++count;
        return count;
    }
    if (i == 0) {
        // trunc(x) (x) Lambda(dx) modulo x^r dx
        for (int jj = 0; jj <= r; ++jj)
            for (int eps = 0; eps <= 1; ++eps) {
                if (jj == r && eps == 1)
                    continue;
                if (jj * alpha + eps * (alpha - 1) == n)
                    ++count;
        }
        return count;
    }
    // beta_0^j alpha_i and beta_0^j beta_i, 0 <= j <= r-1
    for (int jj = 0; jj <= r - 1; ++jj)
        for (int b = 0; b <= 1; ++b)
            if (static_cast<long long>(i) * dy + alpha - 1 + jj * alpha + b == n)
                ++count;
    return count;
}

long long BidegreeHomology::dim(int i, int n) const
{
    for (const auto& c : cells)
        if (c.simplicial == i && c.internal == n)
            return c.dim_bruteforce;
    return 0;
}

namespace {

struct HomologyAtCell
{
    PrimeFieldMatrix cycles;      // ambient coords, columns
    PrimeFieldMatrix boundaries;  // ambient coords, columns
    long long dim = 0;
};

HomologyAtCell homology_cell(const SimplicialOmega& s, int i, int n)
{
    const long long p = s.params().p;
    HomologyAtCell out;
    PrimeFieldMatrix normalized = s.normalized_basis(i, n);
    if (i == 0) {
        // no face below level 0: every normalized chain is a cycle
        out.cycles = normalized;
    } else {
        PrimeFieldMatrix d0 = s.face_matrix(i, 0, n);
        PrimeFieldMatrix d0_on_n = mat_mul(d0, normalized);
        auto kern = kernel_basis(d0_on_n);
        out.cycles = PrimeFieldMatrix::Constant(
            normalized.rows(), static_cast<Eigen::Index>(kern.size()), Fp(0, p));
        for (std::size_t c = 0; c < kern.size(); ++c)
            out.cycles.col(static_cast<Eigen::Index>(c)) = mat_vec(normalized, kern[c]);
    }

    PrimeFieldMatrix next = s.normalized_basis(i + 1, n);
    PrimeFieldMatrix d0_next = s.face_matrix(i + 1, 0, n);
    out.boundaries = mat_mul(d0_next, next);
    out.dim = static_cast<long long>(out.cycles.cols()) - matrix_rank(out.boundaries);
    return out;
}

}  // namespace

BidegreeHomology homology_table(const SimplicialOmega& s, int max_simplicial)
{
    if (max_simplicial + 1 > s.max_level())
        throw std::invalid_argument("homology_table: need levels up to max_simplicial + 1");
    BidegreeHomology out;
    out.params = s.params();
    out.max_simplicial = max_simplicial;
    out.internal_cutoff = s.cutoff();
    for (int i = 0; i <= max_simplicial; ++i)
        for (int n = 0; n <= s.cutoff(); ++n) {
            HomologyAtCell cell = homology_cell(s, i, n);
            BidegreeCell c;
            c.simplicial = i;
            c.internal = n;
            c.dim_bruteforce = cell.dim;
            c.dim_closed_form = derived_closed_form_dim(s.params(), i, n);
            c.match = c.dim_bruteforce == c.dim_closed_form;
            if (!c.match)
                out.all_match = false;
            out.cells.push_back(c);
        }
    return out;
}

long long unnormalized_homology_dim(const SimplicialOmega& s, int i, int n)
{
    long long cycles;
    if (i == 0) {
        cycles = s.level(0).dim(n);
    } else {
        cycles = static_cast<long long>(kernel_basis(s.unnormalized_boundary(i, n)).size());
    }
    long long image = matrix_rank(s.unnormalized_boundary(i + 1, n));
    return cycles - image;
}

CycleReport verify_cycle(const SimplicialOmega& s, int i, const Poly<Fp>& elem)
{
    CycleReport rep;
    auto deg = elem.homogeneous_degree(s.level(i).vars);
    if (!deg || elem.is_zero())
        return rep;
    int n = *deg;

    rep.in_normalized = true;
    for (int j = 1; j <= i; ++j)
        if (!s.face(i, j, elem).is_zero())
            rep.in_normalized = false;

    rep.is_cycle = (i == 0) || s.face(i, 0, elem).is_zero();

    HomologyAtCell cell = homology_cell(s, i, n);
    auto bd_space = column_space(cell.boundaries);
    rep.nonzero_in_homology = !in_row_space(bd_space, s.coords(i, n, elem));
    return rep;
}

bool beta_formula_check(const SimplicialOmega& s, int i)
{
    // x dy_1..dy_i + (r+1) dx sum_k (-1)^k y_k dy_1..(no dy_k)..dy_i
    const ResolutionLevel& lvl = s.level(i);
    const long long p = s.params().p;
    Poly<Fp> expected;
    Monomial lead(lvl.vars.size());
    lead.exponents[lvl.x_index()] = 1;
    for (int j = 1; j <= i; ++j)
        lead.exponents[lvl.dy_index(j)] = 1;
    expected.add_term(Fp(1, p), lead);
    for (int k = 1; k <= i; ++k) {
        Monomial m(lvl.vars.size());
        m.exponents[lvl.dx_index()] = 1;
        m.exponents[lvl.y_index(k)] = 1;
        for (int j = 1; j <= i; ++j)
            if (j != k)
                m.exponents[lvl.dy_index(j)] = 1;
        Fp c = Fp(s.params().r + 1, p);
        if (k % 2 != 0)
            c = -c;
        expected.add_term(c, m);
    }
    return s.beta_elem(i) == expected;
}

bool homologous(const SimplicialOmega& s, int level, int n, const Poly<Fp>& a,
                const Poly<Fp>& b)
{
    Poly<Fp> diff = a - b;
    if (diff.is_zero())
        return true;
    PrimeFieldMatrix boundary = s.unnormalized_boundary(level + 1, n);
    auto space = column_space(boundary);
    return in_row_space(space, s.coords(level, n, diff));
}

bool derham_formula_check(const SimplicialOmega& s, int i)
{
    const DerivedParams& par = s.params();
    bool divisible = (par.r + 1) % par.p == 0;
    if (divisible) {
        // d(gamma_i) = 0 in homology
        Poly<Fp> domega = s.derham(i, s.omega_elem(i));
        if (domega.is_zero())
            return true;
        auto deg = domega.homogeneous_degree(s.level(i).vars);
        return homologous(s, i, *deg, domega, Poly<Fp>::zero());
    }
    // d(a_i) = 0 and d(b_i) = (1 + (r+1) i) a_i
    Poly<Fp> dalpha = s.derham(i, s.alpha_elem(i));
    if (!dalpha.is_zero()) {
        auto deg = dalpha.homogeneous_degree(s.level(i).vars);
        if (!homologous(s, i, *deg, dalpha, Poly<Fp>::zero()))
            return false;
    }
    Poly<Fp> dbeta = s.derham(i, s.beta_elem(i));
    Fp coeff(1 + static_cast<long long>(par.r + 1) * i, par.p);
    Poly<Fp> expected = s.alpha_elem(i).scaled(coeff);
    auto deg = s.alpha_elem(i).homogeneous_degree(s.level(i).vars);
    return homologous(s, i, *deg, dbeta, expected);
}

PrimeFieldMatrix de_rham_on_homology(const SimplicialOmega& s, int i, int n)
{
    const long long p = s.params().p;
    HomologyAtCell source = homology_cell(s, i, n);
    HomologyAtCell target = homology_cell(s, i, n - 1);

    // pinned representatives: cycle columns reduced to a maximal independent
    // family modulo boundaries, in column order
    auto reps_of = [&](const HomologyAtCell& cell) {
        std::vector<PrimeFieldVector> reps;
        PrimeFieldMatrix probe = cell.boundaries;
        for (Eigen::Index c = 0; c < cell.cycles.cols(); ++c) {
            PrimeFieldMatrix trial(probe.rows(), probe.cols() + 1);
            trial.leftCols(probe.cols()) = probe;
            trial.col(probe.cols()) = cell.cycles.col(c);
            if (matrix_rank(trial) > matrix_rank(probe)) {
                reps.push_back(cell.cycles.col(c));
                probe = trial;
            }
        }
        return reps;
    };

    std::vector<PrimeFieldVector> src_reps = reps_of(source);
    std::vector<PrimeFieldVector> dst_reps = reps_of(target);

    PrimeFieldMatrix out = PrimeFieldMatrix::Constant(
        static_cast<Eigen::Index>(dst_reps.size()),
        static_cast<Eigen::Index>(src_reps.size()), Fp(0, p));

    // solve d(rep) = dst_reps * a + boundaries * b
    Eigen::Index dim_target = target.boundaries.rows();
    PrimeFieldMatrix system = PrimeFieldMatrix::Constant(
        dim_target, static_cast<Eigen::Index>(dst_reps.size()) + target.boundaries.cols(),
        Fp(0, p));
    for (std::size_t c = 0; c < dst_reps.size(); ++c)
        system.col(static_cast<Eigen::Index>(c)) = dst_reps[c];
    system.rightCols(target.boundaries.cols()) = target.boundaries;

    for (std::size_t c = 0; c < src_reps.size(); ++c) {
        Poly<Fp> rep = s.from_coords(i, n, src_reps[c]);
        Poly<Fp> image = s.derham(i, rep);
        PrimeFieldVector rhs = image.is_zero()
                                   ? PrimeFieldVector::Constant(dim_target, Fp(0, p))
                                   : s.coords(i, n - 1, image);
        PrimeFieldVector solution;
        if (!solve_exact(system, rhs, solution))
            throw std::logic_error("de_rham_on_homology: image is not a cycle class");
        for (std::size_t rr = 0; rr < dst_reps.size(); ++rr)
            out(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(c)) =
                solution(static_cast<Eigen::Index>(rr));
    }
    return out;
}

}  // namespace loopcoh
