#include "sderiv/catalog.hpp"

#include <utility>

#include "sderiv/differential.hpp"
#include "sderiv/random.hpp"

namespace sderiv {

std::string_view expectation_name(Expectation e) {
    switch (e) {
        case Expectation::SDerivable: return "s-derivable";
        case Expectation::NotSDerivable: return "not-s-derivable";
        case Expectation::SliceOnly: return "slice-only";
    }
    return "unknown";
}

QFunction power_function(unsigned n) {
    QFunction f(
        "pow" + std::to_string(n),
        [n](const Quaternion& q) {
            Quaternion acc = Quaternion::one();
            for (unsigned m = 0; m < n; ++m) acc *= q;
            return acc;
        });
    f.with_exact_partials([n](const Quaternion& q) {
        return PartialDerivatives{
            partial_exact_pow(n, q, Axis::T), partial_exact_pow(n, q, Axis::X),
            partial_exact_pow(n, q, Axis::Y), partial_exact_pow(n, q, Axis::Z)};
    });
    f.mark_slice_preserving();
    return f;
}

QFunction iota_function() {
    QFunction f(
        "iota", [](const Quaternion& q) { return slice_form(q).iota.axis; },
        FunctionDomain::non_real());
    f.with_exact_partials([](const Quaternion& q) {
        const SliceForm s = slice_form(q);
        const Quaternion io = s.iota.axis;
        const double inv_r = 1.0 / s.r;
        const auto d = [&](const Quaternion& e, double component) {
            return (e - io * (component * inv_r)) * inv_r;
        };
        return PartialDerivatives{Quaternion::zero(), d(Quaternion::i(), q.x),
                                  d(Quaternion::j(), q.y), d(Quaternion::k(), q.z)};
    });
    f.mark_slice_preserving();
    return f;
}

QFunction linear_function(const Quaternion& a, const Quaternion& b) {
    QFunction f("linear", [a, b](const Quaternion& q) { return q * a + b; });
    f.with_exact_partials([a](const Quaternion&) {
        return PartialDerivatives{a, Quaternion::i() * a, Quaternion::j() * a,
                                  Quaternion::k() * a};
    });
    f.mark_slice_preserving();
    return f;
}

QFunction conjugation_function() {
    QFunction f("conj", [](const Quaternion& q) { return q.conj(); });
    f.with_exact_partials([](const Quaternion&) {
        return PartialDerivatives{Quaternion::one(), -Quaternion::i(), -Quaternion::j(),
                                  -Quaternion::k()};
    });
    // conj(t + r iota) = t - r iota, so the slice components exist (u = t,
    // v = -r); they just fail the Cauchy-Riemann pair.
    f.mark_slice_preserving();
    return f;
}

QFunction left_mult_function(std::string name, const Quaternion& a) {
    QFunction f(std::move(name), [a](const Quaternion& q) { return a * q; });
    f.with_exact_partials([a](const Quaternion&) {
        return PartialDerivatives{a, a * Quaternion::i(), a * Quaternion::j(),
                                  a * Quaternion::k()};
    });
    return f;
}

PowerSeries exponential_series(std::size_t order, double radius) {
    std::vector<Quaternion> coeffs;
    coeffs.reserve(order + 1);
    double c = 1.0;
    coeffs.emplace_back(c);
    for (std::size_t k = 1; k <= order; ++k) {
        c /= static_cast<double>(k);
        coeffs.emplace_back(c);
    }
    return PowerSeries(std::move(coeffs), radius);
}

std::vector<CatalogEntry> builtin_catalog(std::uint64_t seed) {
    Rng rng = Rng(seed).derive(0xCA7A106);

    std::vector<CatalogEntry> entries;
    for (unsigned n = 0; n <= 8; ++n) {
        entries.push_back({"pow" + std::to_string(n), power_function(n),
                           Expectation::SDerivable, std::nullopt, std::nullopt,
                           "power function q^" + std::to_string(n)});
    }
    entries.push_back({"iota", iota_function(), Expectation::SDerivable, std::nullopt,
                       std::nullopt, "slice direction; defined off the real axis"});

    PowerSeries exp = exponential_series();
    entries.push_back({"exp", exp.as_qfunction("exp"), Expectation::SDerivable, std::nullopt,
                       std::move(exp), "truncated exponential series"});

    const Quaternion a_lin = rng.unit_quaternion() * rng.uniform(0.5, 2.0);
    const Quaternion b_lin = rng.in_ball(2.0);
    entries.push_back({"linear", linear_function(a_lin, b_lin), Expectation::SDerivable,
                       std::nullopt, std::nullopt, "q a + b with seeded a, b"});

    entries.push_back({"conj", conjugation_function(), Expectation::NotSDerivable, std::nullopt,
                       std::nullopt, "quaternion conjugation"});

    entries.push_back({"iq", left_mult_function("iq", Quaternion::i()), Expectation::SliceOnly,
                       UnitImaginary{Quaternion::i()}, std::nullopt,
                       "left multiplication by i; regular on the i slice only"});

    // Left multiplication by a generic non-real coefficient; resample until
    // the vector part carries a healthy fraction of the norm.
    Quaternion a_left;
    do {
        a_left = rng.unit_quaternion() * rng.uniform(0.5, 2.0);
    } while (a_left.vector_norm() < 0.3 * a_left.norm());
    entries.push_back({"aq", left_mult_function("aq", a_left), Expectation::NotSDerivable,
                       std::nullopt, std::nullopt, "a q with seeded non-real a"});

    return entries;
}

} // namespace sderiv
