#include "sderiv/differential.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sderiv/errors.hpp"

namespace sderiv {

namespace {

Quaternion central_diff(const QFunction& f, const Quaternion& q, const Quaternion& offset) {
    const Quaternion hi = q + offset;
    const Quaternion lo = q - offset;
    if (!f.domain().contains(hi) || !f.domain().contains(lo)) {
        throw DomainExit("finite-difference probe left the domain of " + f.name());
    }
    return f(hi) - f(lo);
}

} // namespace

Quaternion partial_fd(const QFunction& f, const Quaternion& q, Axis axis, double step) {
    return central_diff(f, q, axis_unit(axis) * step) / (2.0 * step);
}

Quaternion directional_fd(const QFunction& f, const Quaternion& q, const Quaternion& dir,
                          double step) {
    return central_diff(f, q, dir * step) / (2.0 * step);
}

Quaternion partial_exact_pow(unsigned n, const Quaternion& q, Axis axis) {
    if (n == 0) return Quaternion::zero();
    std::vector<Quaternion> pow(n);
    pow[0] = Quaternion::one();
    for (unsigned m = 1; m < n; ++m) pow[m] = pow[m - 1] * q;
    if (axis == Axis::T) return pow[n - 1] * static_cast<double>(n);
    const Quaternion e = axis_unit(axis);
    Quaternion sum;
    for (unsigned m = 0; m < n; ++m) sum += pow[m] * e * pow[n - 1 - m];
    return sum;
}

PartialDerivatives partials(const QFunction& f, const Quaternion& q, double step, bool force_fd) {
    if (!force_fd && f.has_exact_partials()) return f.exact_partials(q);
    return {partial_fd(f, q, Axis::T, step), partial_fd(f, q, Axis::X, step),
            partial_fd(f, q, Axis::Y, step), partial_fd(f, q, Axis::Z, step)};
}

double cullen_residual(const QFunction& f, const Quaternion& q, double step) {
    const SliceForm s = slice_form(q);
    const Quaternion d_t = partial_fd(f, q, Axis::T, step);
    const Quaternion d_r = directional_fd(f, q, s.iota.axis, step);
    return (d_t + s.iota.axis * d_r).norm();
}

double cullen_residual(const PartialDerivatives& p, const Quaternion& q) {
    const SliceForm s = slice_form(q);
    const Quaternion d_r = jacobian_apply(p, s.iota.axis);
    return (p.d_t + s.iota.axis * d_r).norm();
}

Quaternion partial_iota(const QFunction& f, const Quaternion& q, double step) {
    const SliceForm s = slice_form(q);
    if (near_pole(s.iota)) {
        throw SingularSubplane("angular derivative undefined near the plane R + kR");
    }
    const SphericalAngles a = angles_from_iota(s.iota);
    const Quaternion base(s.t);

    const auto at = [&](double alpha, double beta) {
        return f(base + iota_from_angles({alpha, beta}).axis * s.r);
    };
    const Quaternion df_alpha = (at(a.alpha + step, a.beta) - at(a.alpha - step, a.beta)) / (2.0 * step);
    const Quaternion df_beta = (at(a.alpha, a.beta + step) - at(a.alpha, a.beta - step)) / (2.0 * step);

    return inverse(alpha_tangent(a)) * df_alpha + inverse(beta_tangent(a)) * df_beta;
}

double fueter_decomposition_residual(const QFunction& f, const Quaternion& q, double step) {
    const SliceForm s = slice_form(q);
    const PartialDerivatives p = partials(f, q, step);
    const Quaternion lhs = fueter_apply(p);

    const Quaternion d_t = f.has_exact_partials() ? p.d_t : partial_fd(f, q, Axis::T, step);
    const Quaternion d_r = directional_fd(f, q, s.iota.axis, step);
    const Quaternion d_iota = partial_iota(f, q, step);
    const Quaternion rhs = d_t + s.iota.axis * d_r - d_iota / s.r;
    return (lhs - rhs).norm();
}

double ResidualVector::max_residual() const {
    double m = 0.0;
    for (const auto& v : {eq1, eq2, eq3, eq4, eq5, eq6, cullen}) {
        if (v) m = std::max(m, *v);
    }
    return m;
}

ResidualVector characteristic_residuals(const QFunction& f, const Quaternion& q, double step,
                                        double r_band, bool force_fd) {
    ResidualVector out;
    out.point = q;
    const PartialDerivatives p = partials(f, q, step, force_fd);

    if (q.vector_norm() <= r_band) {
        out.eq1 = (p.d_x - Quaternion::i() * p.d_t).norm();
        out.eq2 = (p.d_y - Quaternion::j() * p.d_t).norm();
        out.eq3 = (p.d_z - Quaternion::k() * p.d_t).norm();
        return out;
    }

    const SliceForm s = slice_form(q);
    const Quaternion io = s.iota.axis;
    const Quaternion df = fueter_apply(p);
    const auto equation = [&](const Quaternion& e, const Quaternion& d_e) {
        const Quaternion minus = (e - io * e * io) * 0.5;
        const Quaternion plus = (e + io * e * io) * 0.25;
        return (d_e - minus * p.d_t + plus * df).norm();
    };
    out.eq4 = equation(Quaternion::i(), p.d_x);
    out.eq5 = equation(Quaternion::j(), p.d_y);
    out.eq6 = equation(Quaternion::k(), p.d_z);
    out.cullen = cullen_residual(p, q);
    return out;
}

} // namespace sderiv
