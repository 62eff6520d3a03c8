#include "sderiv/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sderiv/differential.hpp"
#include "sderiv/errors.hpp"
#include "sderiv/random.hpp"

namespace sderiv {

PowerSeries::PowerSeries(std::vector<Quaternion> coeffs, double radius)
    : coeffs_(std::move(coeffs)), radius_(radius) {
    if (coeffs_.empty()) throw std::invalid_argument("power series needs at least a_0");
    if (!(radius_ > 0.0)) throw std::invalid_argument("power series radius must be positive");
}

PowerSeries PowerSeries::load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("series file: missing header");
    double radius = 0.0;
    long order = -1;
    if (std::sscanf(header.c_str(), " R=%lf N=%ld", &radius, &order) != 2 || order < 0) {
        throw std::runtime_error("series file: header must be \"R=<real> N=<int>\"");
    }
    std::vector<Quaternion> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (long k = 0; k <= order; ++k) {
        Quaternion a;
        if (!(in >> a.t >> a.x >> a.y >> a.z)) {
            throw std::runtime_error("series file: expected " + std::to_string(order + 1) +
                                     " coefficient lines, got " + std::to_string(k));
        }
        coeffs.push_back(a);
    }
    return PowerSeries(std::move(coeffs), radius);
}

PowerSeries PowerSeries::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open series file: " + path);
    return load(in);
}

void PowerSeries::save(std::ostream& out) const {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "R=%.17g N=%zu\n", radius_, order());
    out << buf;
    for (const Quaternion& a : coeffs_) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g\n", a.t, a.x, a.y, a.z);
        out << buf;
    }
}

Quaternion PowerSeries::eval(const Quaternion& q) const {
    if (q.norm() >= radius_) {
        throw OutsideRadius("series evaluated at |q| = " + std::to_string(q.norm()) +
                            " >= R = " + std::to_string(radius_));
    }
    Quaternion acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = coeffs_[k] + q * acc;
    return acc;
}

std::pair<Quaternion, Quaternion> PowerSeries::slice_decompose(double t, double r) const {
    if (r < 0.0) throw std::invalid_argument("slice_decompose: r must be nonnegative");
    if (std::hypot(t, r) >= radius_) {
        throw OutsideRadius("slice point outside the series radius");
    }
    // (t + r iota)^n = u_n + iota v_n with real u_n, v_n independent of iota.
    double u_n = 1.0, v_n = 0.0;
    Quaternion u, v;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        u += coeffs_[n] * u_n;
        v += coeffs_[n] * v_n;
        const double u_next = t * u_n - r * v_n;
        v_n = r * u_n + t * v_n;
        u_n = u_next;
    }
    return {u, v};
}

double PowerSeries::cr_residual(double t, double r, double step) const {
    const double reach = std::hypot(std::abs(t) + step, r + step);
    if (reach >= radius_) throw OutsideRadius("finite-difference probe outside the radius");
    const auto u_at = [&](double tt, double rr) { return slice_decompose(tt, rr).first; };
    const auto v_at = [&](double tt, double rr) { return slice_decompose(tt, rr).second; };
    const double inv = 1.0 / (2.0 * step);
    const Quaternion du_dt = (u_at(t + step, r) - u_at(t - step, r)) * inv;
    const Quaternion du_dr = (u_at(t, r + step) - u_at(t, r - step)) * inv;
    const Quaternion dv_dt = (v_at(t + step, r) - v_at(t - step, r)) * inv;
    const Quaternion dv_dr = (v_at(t, r + step) - v_at(t, r - step)) * inv;
    return std::max((du_dt - dv_dr).norm(), (du_dr + dv_dt).norm());
}

PowerSeries PowerSeries::termwise_derivative() const {
    std::vector<Quaternion> d;
    if (coeffs_.size() == 1) {
        d.push_back(Quaternion::zero());
    } else {
        d.reserve(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            d.push_back(coeffs_[k] * static_cast<double>(k));
        }
    }
    return PowerSeries(std::move(d), radius_);
}

Quaternion PowerSeries::perp_quotient(const Quaternion& q) const {
    if (q.vector_norm() <= kRealSliceCutoff) {
        throw DegenerateSlice("perp quotient undefined at a (numerically) real point");
    }
    const Quaternion qbar = q.conj();
    return inverse(q - qbar) * (eval(q) - eval(qbar));
}

PowerSeries PowerSeries::truncated(std::size_t m) const {
    const std::size_t count = std::min(m, order()) + 1;
    return PowerSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(count)},
                       radius_);
}

double PowerSeries::tail_bound(std::size_t m, double rho) const {
    double bound = 0.0;
    double rho_k = std::pow(rho, static_cast<double>(m + 1));
    for (std::size_t k = m + 1; k < coeffs_.size(); ++k) {
        bound += rho_k * coeffs_[k].norm();
        rho_k *= rho;
    }
    return bound;
}

double PowerSeries::root_test_radius() const {
    const std::size_t n = order();
    if (n == 0) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t k = std::max<std::size_t>(1, n / 2); k <= n; ++k) {
        const double a = coeffs_[k].norm();
        if (a > 0.0) worst = std::max(worst, std::pow(a, 1.0 / static_cast<double>(k)));
    }
    if (worst == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / worst;
}

PartialDerivatives PowerSeries::exact_partials(const Quaternion& q) const {
    if (q.norm() >= radius_) throw OutsideRadius("partials requested outside the radius");
    const std::size_t n = order();
    PartialDerivatives p;
    if (n == 0) return p;

    std::vector<Quaternion> pow(n);
    pow[0] = Quaternion::one();
    for (std::size_t m = 1; m < n; ++m) pow[m] = pow[m - 1] * q;

    // Suffix tails T_m = a_{m+1} + q T_{m+1} give the product-rule partials
    // d_e f = sum_m q^m e T_m in O(N) products per axis.
    std::vector<Quaternion> tail(n);
    tail[n - 1] = coeffs_[n];
    for (std::size_t m = n - 1; m-- > 0;) tail[m] = coeffs_[m + 1] + q * tail[m + 1];

    for (std::size_t k = 1; k <= n; ++k) {
        p.d_t += pow[k - 1] * coeffs_[k] * static_cast<double>(k);
    }
    for (std::size_t m = 0; m < n; ++m) {
        p.d_x += pow[m] * Quaternion::i() * tail[m];
        p.d_y += pow[m] * Quaternion::j() * tail[m];
        p.d_z += pow[m] * Quaternion::k() * tail[m];
    }
    return p;
}

QFunction PowerSeries::as_qfunction(std::string name) const {
    PowerSeries copy = *this;
    QFunction f(std::move(name), [copy](const Quaternion& q) { return copy.eval(q); },
                FunctionDomain::ball(radius_));
    f.with_exact_partials(
        [copy](const Quaternion& q) { return copy.exact_partials(q); });
    f.mark_slice_preserving();
    return f;
}

namespace {

double pairwise_gap(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
    return std::max({(a - b).norm(), (a - c).norm(), (b - c).norm()});
}

template <typename EvalAt, typename DecomposeAt, typename FueterAt, typename QuotientAt,
          typename CrAt>
std::vector<SliceCriterionRow> slice_criterion_impl(
    std::span<const std::pair<double, double>> grid, const SliceCriterionOptions& opts,
    EvalAt eval_at, DecomposeAt decompose_at, FueterAt fueter_at, QuotientAt quotient_at,
    CrAt cr_at) {
    Rng rng(opts.seed);
    std::vector<UnitImaginary> iotas;
    iotas.reserve(static_cast<std::size_t>(opts.iota_samples));
    for (int i = 0; i < opts.iota_samples; ++i) iotas.push_back({rng.unit_imaginary()});

    std::vector<SliceCriterionRow> rows;
    rows.reserve(grid.size());
    for (const auto& [t, r] : grid) {
        SliceCriterionRow row;
        row.t = t;
        row.r = r;
        try {
            if (r <= kRealSliceCutoff) {
                throw DegenerateSlice("slice criteria need r > 0");
            }
            const auto [u, v] = decompose_at(t, r);
            for (const UnitImaginary& io : iotas) {
                const Quaternion direct = eval_at(t, r, io);
                const Quaternion assembled = u + io.axis * v;
                row.angle_dev = std::max(row.angle_dev, (direct - assembled).norm());
            }
            row.cr_residual = cr_at(t, r);

            const UnitImaginary io = iotas.front();
            const Quaternion q = Quaternion(t) + io.axis * r;
            const Quaternion from_v = v / r;
            const Quaternion from_fueter = fueter_at(q) * -0.5;
            const Quaternion from_quotient = quotient_at(q);
            row.route_gap = pairwise_gap(from_v, from_fueter, from_quotient);

            row.pass = row.angle_dev <= opts.tol_angle && row.cr_residual <= opts.tol_cr &&
                       row.route_gap <= opts.tol_routes;
            if (!row.pass) {
                if (row.angle_dev > opts.tol_angle) row.reason = "slice components depend on iota";
                else if (row.cr_residual > opts.tol_cr) row.reason = "Cauchy-Riemann pair violated";
                else row.reason = "perpendicular routes disagree";
            }
        } catch (const NumericDomainError& e) {
            row.skipped = true;
            row.reason = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<SliceCriterionRow> slice_criterion_check(
    const PowerSeries& s, std::span<const std::pair<double, double>> grid,
    const SliceCriterionOptions& opts) {
    return slice_criterion_impl(
        grid, opts,
        [&](double t, double r, const UnitImaginary& io) {
            return s.eval(Quaternion(t) + io.axis * r);
        },
        [&](double t, double r) { return s.slice_decompose(t, r); },
        [&](const Quaternion& q) { return fueter_apply(s.exact_partials(q)); },
        [&](const Quaternion& q) { return s.perp_quotient(q); },
        [&](double t, double r) { return s.cr_residual(t, r, opts.step); });
}

std::vector<SliceCriterionRow> slice_criterion_check(
    const SliceFunction& f, double radius, std::span<const std::pair<double, double>> grid,
    const SliceCriterionOptions& opts) {
    const FunctionDomain domain =
        radius > 0.0 ? FunctionDomain::ball(radius) : FunctionDomain::non_real();
    QFunction assembled(
        "slice-function",
        [f](const Quaternion& q) {
            const SliceForm s = slice_form(q);
            return f.eval(s.t, s.r, s.iota);
        },
        domain);

    const double inv = 1.0 / (2.0 * opts.step);
    return slice_criterion_impl(
        grid, opts,
        [&](double t, double r, const UnitImaginary& io) { return f.eval(t, r, io); },
        [&](double t, double r) { return std::pair{f.u(t, r), f.v(t, r)}; },
        [&](const Quaternion& q) { return fueter_apply(partials(assembled, q, opts.step)); },
        [&](const Quaternion& q) {
            return inverse(q - q.conj()) * (assembled(q) - assembled(q.conj()));
        },
        [&](double t, double r) {
            const Quaternion du_dt = (f.u(t + opts.step, r) - f.u(t - opts.step, r)) * inv;
            const Quaternion du_dr = (f.u(t, r + opts.step) - f.u(t, r - opts.step)) * inv;
            const Quaternion dv_dt = (f.v(t + opts.step, r) - f.v(t - opts.step, r)) * inv;
            const Quaternion dv_dr = (f.v(t, r + opts.step) - f.v(t, r - opts.step)) * inv;
            return std::max((du_dt - dv_dr).norm(), (du_dr + dv_dt).norm());
        });
}

} // namespace sderiv
