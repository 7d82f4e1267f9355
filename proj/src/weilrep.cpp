#include "cmh/weilrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace cmh {

namespace mp = boost::multiprecision;

namespace {

integer_matrix identity_matrix(std::size_t n)
{
    integer_matrix m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

smith_form smith_normal_form(integer_matrix const & input)
{
    std::size_t const rows = input.size();
    std::size_t const cols = rows ? input[0].size() : 0;
    for (auto const & r : input)
        if (r.size() != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    integer_matrix a = input;
    integer_matrix u = identity_matrix(rows);
    integer_matrix v = identity_matrix(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto & r : a)
            std::swap(r[i], r[j]);
        for (auto & r : v)
            std::swap(r[i], r[j]);
    };
    // row_i += k row_j
    auto add_row = [&](std::size_t i, std::size_t j, long k) {
        for (std::size_t c = 0; c < cols; ++c)
            a[i][c] += k * a[j][c];
        for (std::size_t c = 0; c < rows; ++c)
            u[i][c] += k * u[j][c];
    };
    // col_i += k col_j
    auto add_col = [&](std::size_t i, std::size_t j, long k) {
        for (std::size_t r = 0; r < rows; ++r)
            a[r][i] += k * a[r][j];
        for (std::size_t r = 0; r < cols; ++r)
            v[r][i] += k * v[r][j];
    };

    std::size_t const n = std::min(rows, cols);
    std::vector<long> diagonal;
    for (std::size_t t = 0; t < n; ++t) {
        bool any = false;
        while (true) {
            std::size_t pi = t, pj = t;
            long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::labs(a[i][j]) < best)) {
                        best = std::labs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0)
                break;
            any = true;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                long q = floor_div(a[i][t], a[t][t]);
                if (q)
                    add_row(i, t, -q);
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                long q = floor_div(a[t][j], a[t][t]);
                if (q)
                    add_col(j, t, -q);
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (!any)
            break;
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < cols; ++c)
                a[t][c] = -a[t][c];
            for (std::size_t c = 0; c < rows; ++c)
                u[t][c] = -u[t][c];
        }
        diagonal.push_back(a[t][t]);
    }
    return {std::move(u), std::move(v), std::move(diagonal)};
}

rational frac(rational const & x)
{
    bigint const num = mp::numerator(x);
    bigint const den = mp::denominator(x);
    bigint r = num % den;
    if (r < 0)
        r += den;
    return rational(r, den);
}

finite_quadratic_module::finite_quadratic_module(std::vector<long> orders, std::vector<rational> q_gen,
                                                 std::vector<std::vector<rational>> b_gen, int b_plus,
                                                 int b_minus)
    : orders_(std::move(orders)), q_gen_(std::move(q_gen)), b_gen_(std::move(b_gen)), b_plus_(b_plus),
      b_minus_(b_minus)
{
    std::size_t const k = orders_.size();
    if (q_gen_.size() != k || b_gen_.size() != k)
        throw std::invalid_argument("finite_quadratic_module: generator data size mismatch");
    for (std::size_t i = 0; i < k; ++i) {
        if (orders_[i] < 1)
            throw std::invalid_argument("finite_quadratic_module: generator orders must be positive");
        if (b_gen_[i].size() != k)
            throw std::invalid_argument("finite_quadratic_module: bilinear table must be square");
    }
    for (std::size_t i = 0; i < k; ++i) {
        q_gen_[i] = frac(q_gen_[i]);
        for (std::size_t j = 0; j < k; ++j)
            b_gen_[i][j] = frac(b_gen_[i][j]);
    }

    long total = 1;
    for (long o : orders_)
        total *= o;
    std::vector<long> coords(k, 0);
    for (long idx = 0; idx < total; ++idx) {
        elements_.push_back(coords);
        for (std::size_t pos = k; pos-- > 0;) {
            if (++coords[pos] < orders_[pos])
                break;
            coords[pos] = 0;
        }
    }

    for (auto const & x : elements_) {
        rational acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
            acc += rational(x[i] * x[i]) * q_gen_[i];
            for (std::size_t j = i + 1; j < k; ++j)
                acc += rational(x[i] * x[j]) * b_gen_[i][j];
        }
        q_.push_back(frac(acc));
    }
    for (auto const & x : elements_) {
        std::vector<long> neg(k);
        for (std::size_t i = 0; i < k; ++i)
            neg[i] = (orders_[i] - x[i]) % orders_[i];
        negation_.push_back(index_of(neg));
    }
}

std::size_t finite_quadratic_module::index_of(std::vector<long> const & coords) const
{
    if (coords.size() != orders_.size())
        throw std::invalid_argument("finite_quadratic_module: coordinate vector has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        long c = coords[i] % orders_[i];
        if (c < 0)
            c += orders_[i];
        idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(c);
    }
    return idx;
}

rational finite_quadratic_module::bilinear(std::size_t x, std::size_t y) const
{
    auto const & a = elements_.at(x);
    auto const & b = elements_.at(y);
    rational acc = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        for (std::size_t j = 0; j < orders_.size(); ++j)
            acc += rational(a[i] * b[j]) * b_gen_[i][j];
    return frac(acc);
}

long finite_quadratic_module::level() const
{
    long n = 1;
    for (auto const & q : q_) {
        bigint const den = mp::denominator(q);
        n = std::lcm(n, den.convert_to<long>());
    }
    // the level also kills the bilinear form
    for (std::size_t i = 0; i < orders_.size(); ++i)
        for (std::size_t j = 0; j < orders_.size(); ++j)
            n = std::lcm(n, mp::denominator(b_gen_[i][j]).convert_to<long>());
    return n;
}

long finite_quadratic_module::exponent() const
{
    long n = 1;
    for (long o : orders_)
        n = std::lcm(n, o);
    return n;
}

finite_quadratic_module discriminant_module(integer_matrix const & gram)
{
    std::size_t const n = gram.size();
    if (n == 0)
        throw std::invalid_argument("discriminant_module: empty Gram matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n)
            throw std::invalid_argument("discriminant_module: Gram matrix must be square");
        if (gram[i][i] % 2 != 0)
            throw std::invalid_argument("discriminant_module: Gram matrix must have even diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("discriminant_module: Gram matrix must be symmetric");
    }
    smith_form const snf = smith_normal_form(gram);
    if (snf.diagonal.size() != n)
        throw std::invalid_argument("discriminant_module: Gram matrix is degenerate");

    Eigen::MatrixXd g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(gram[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    int b_plus = 0, b_minus = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        (es.eigenvalues()(i) > 0 ? b_plus : b_minus)++;

    // generators x_i = v_i / d_i for the columns v_i of V with d_i > 1
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
        if (snf.diagonal[i] > 1)
            kept.push_back(i);
    auto pairing = [&](std::size_t i, std::size_t j) {
        long acc = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                acc += snf.v[r][i] * gram[r][c] * snf.v[c][j];
        return acc;
    };
    std::vector<long> orders;
    std::vector<rational> q_gen;
    std::vector<std::vector<rational>> b_gen(kept.size(), std::vector<rational>(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        long const da = snf.diagonal[kept[a]];
        orders.push_back(da);
        q_gen.push_back(rational(pairing(kept[a], kept[a]), 2 * da * da));
        for (std::size_t b = 0; b < kept.size(); ++b) {
            long const db = snf.diagonal[kept[b]];
            b_gen[a][b] = rational(pairing(kept[a], kept[b]), da * db);
        }
    }
    return finite_quadratic_module(std::move(orders), std::move(q_gen), std::move(b_gen), b_plus, b_minus);
}

namespace {

std::complex<double> e_of(rational const & x)
{
    double const t = frac(x).convert_to<double>();
    return std::polar(1.0, 2 * M_PI * t);
}

} // namespace

std::complex<double> weil_phase(finite_quadratic_module const & fqm)
{
    return e_of(rational(fqm.signature(), 8));
}

weil_generators weil_representation(finite_quadratic_module const & fqm)
{
    auto const size = static_cast<Eigen::Index>(fqm.size());
    weil_generators w{weil_matrix::Zero(size, size), weil_matrix::Zero(size, size)};
    std::complex<double> const scale = weil_phase(fqm) / std::sqrt(static_cast<double>(fqm.size()));
    for (Eigen::Index mu = 0; mu < size; ++mu) {
        auto const m = static_cast<std::size_t>(mu);
        w.t(mu, mu) = e_of(-fqm.q(m));
        for (Eigen::Index nu = 0; nu < size; ++nu)
            w.s(nu, mu) = scale * e_of(fqm.bilinear(m, static_cast<std::size_t>(nu)));
    }
    return w;
}

double matrix_deviation(weil_matrix const & a, weil_matrix const & b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

double weil_relation_report::max_deviation() const
{
    return std::max({unitarity_s, unitarity_t, braid, s_squared, s_fourth});
}

bool weil_relation_report::passed(double tolerance) const
{
    return max_deviation() < tolerance && t_order_matches_level;
}

weil_relation_report verify_weil_relations(finite_quadratic_module const & fqm)
{
    auto const w = weil_representation(fqm);
    auto const size = static_cast<Eigen::Index>(fqm.size());
    weil_matrix const id = weil_matrix::Identity(size, size);
    weil_relation_report r;
    r.unitarity_s = matrix_deviation(w.s * w.s.adjoint(), id);
    r.unitarity_t = matrix_deviation(w.t * w.t.adjoint(), id);
    weil_matrix const s2 = w.s * w.s;
    weil_matrix const st = w.s * w.t;
    r.braid = matrix_deviation(st * st * st, s2);

    weil_matrix neg = weil_matrix::Zero(size, size);
    for (Eigen::Index mu = 0; mu < size; ++mu)
        neg(static_cast<Eigen::Index>(fqm.negation(static_cast<std::size_t>(mu))), mu) = 1;
    r.s_squared = matrix_deviation(s2, e_of(rational(fqm.signature(), 4)) * neg);
    r.s_fourth = matrix_deviation(s2 * s2, e_of(rational(fqm.signature(), 2)) * id);

    r.level = fqm.level();
    r.even_signature = fqm.signature() % 2 == 0;
    weil_matrix power = w.t;
    long const cap = 8 * fqm.exponent() * fqm.exponent();
    for (long k = 1; k <= cap; ++k) {
        if (matrix_deviation(power, id) < 1e-9) {
            r.t_order = k;
            break;
        }
        power = power * w.t;
    }
    r.t_order_matches_level = r.t_order == r.level;
    return r;
}

form_validation_report validate_form_support(finite_quadratic_module const & fqm, form_coefficients const & coeffs)
{
    form_validation_report r;
    r.expected_weight = rational(1) - rational(fqm.b_plus(), 2);
    r.weight_ok = coeffs.weight == r.expected_weight;
    long const level = fqm.level();
    for (std::size_t i = 0; i < coeffs.entries.size(); ++i) {
        auto const & e = coeffs.entries[i];
        if (e.mu.size() != fqm.generator_orders().size()) {
            r.violations.push_back({i, "mu has " + std::to_string(e.mu.size()) + " coordinates, module has " +
                                           std::to_string(fqm.generator_orders().size())});
            continue;
        }
        if (e.c == 0)
            continue;
        std::size_t const mu = fqm.index_of(e.mu);
        rational const shifted = e.m + fqm.q(mu);
        if (frac(shifted) != 0)
            r.violations.push_back({i, "m + Q(mu) = " + shifted.str() + " is not an integer"});
        rational const scaled = e.m * level;
        if (mp::denominator(scaled) != 1)
            r.violations.push_back({i, "m = " + e.m.str() + " is not in (1/" + std::to_string(level) + ")Z"});
    }
    return r;
}

formal_special_divisor borcherds_divisor(finite_quadratic_module const & fqm, form_coefficients const & coeffs)
{
    auto const check = validate_form_support(fqm, coeffs);
    if (!check.violations.empty())
        throw std::invalid_argument("borcherds_divisor: entry " + std::to_string(check.violations.front().entry) +
                                    ": " + check.violations.front().reason);
    formal_special_divisor z;
    std::set<std::pair<rational, std::size_t>> seen;
    for (auto const & e : coeffs.entries) {
        std::size_t const mu = fqm.index_of(e.mu);
        if (!seen.emplace(e.m, mu).second)
            throw std::invalid_argument("borcherds_divisor: repeated coefficient c(" + e.m.str() + ", mu#" +
                                        std::to_string(mu) + ")");
        if (e.c == 0)
            continue;
        if (e.m < 0)
            z.terms[{-e.m, mu}] = e.c;
        else if (e.m == 0 && mu == 0)
            z.bundle_power = e.c;
    }
    return z;
}

} // namespace cmh
