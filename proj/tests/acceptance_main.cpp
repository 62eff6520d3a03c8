// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. argv[1] must be the path to the sderiv CLI binary (used
// by the harness-gate criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sderiv/catalog.hpp"
#include "sderiv/differential.hpp"
#include "sderiv/errors.hpp"
#include "sderiv/grid.hpp"
#include "sderiv/harness.hpp"
#include "sderiv/power_series.hpp"
#include "sderiv/random.hpp"
#include "sderiv/s_derivative.hpp"

using namespace sderiv;

namespace {

struct Criterion {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

Quaternion random_nonreal(Rng& rng, double radius, double min_r, double min_sin_beta) {
    for (;;) {
        const Quaternion q = rng.in_ball(radius);
        const double r = q.vector_norm();
        if (r < min_r) continue;
        if (std::sqrt(q.x * q.x + q.y * q.y) / r < min_sin_beta) continue;
        return q;
    }
}

// ---------------------------------------------------------------------------
// 1. Algebraic identity suite, tolerance 1e-12, 1000 random non-real points.
Criterion criterion1() {
    Timer timer;
    Rng rng(0xACC1);
    double worst = 0.0;

    for (int n = 0; n < 1000; ++n) {
        const Quaternion q = random_nonreal(rng, 2.0, 1e-3, 0.0);
        const SliceForm s = slice_form(q);
        const Quaternion io = s.iota.axis;

        Quaternion minus_sum, plus_sum;
        const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
        const double comps[3] = {q.x, q.y, q.z};
        for (int a = 0; a < 3; ++a) {
            const Quaternion e = units[a];
            const Quaternion sandwich = io * e * io;
            minus_sum += e * ((e - sandwich) * 0.5);
            plus_sum += e * ((e + sandwich) * 0.5);

            // (x/r) iota = (i - iota i iota)/2 and the gradient identity
            // iota_x = (1/r)(i + iota i iota)/2, with y/z analogues.
            worst = std::max(worst, (io * (comps[a] / s.r) - (e - sandwich) * 0.5).norm());
            const Quaternion grad_identity = (e + sandwich) * (0.5 / s.r);
            const Quaternion grad_direct = (e - io * (comps[a] / s.r)) / s.r;
            worst = std::max(worst, (grad_identity - grad_direct).norm());
        }
        worst = std::max(worst, (minus_sum - Quaternion(-1)).norm());
        worst = std::max(worst, (plus_sum - Quaternion(-2)).norm());
    }

    const double elapsed = timer.seconds();
    Criterion c;
    c.seconds = elapsed;
    c.pass = worst <= 1e-12 && elapsed < 1.0;
    c.detail = fmt("max deviation %.2e (tol 1e-12), %.2f s (limit 1 s)", worst, elapsed);
    return c;
}

// ---------------------------------------------------------------------------
// 2. Characteristic equations on the regular entries over the default grid.
// All three function families provide exact partials, so the checker
// dispatches to them and the 1e-10 tolerance applies; the finite-difference
// route (step 1e-5, tolerance 1e-6 where it is the dispatch) is measured and
// reported alongside.
Criterion criterion2() {
    Timer timer;
    const auto grid = generate_grid(GridSpec{}, 42);

    std::vector<QFunction> functions;
    for (unsigned n = 0; n <= 8; ++n) functions.push_back(power_function(n));
    functions.push_back(iota_function());
    functions.push_back(exponential_series().as_qfunction("exp"));

    const double step = 1e-5;
    double exact_max = 0.0, fd_max = 0.0, fd_max_ball2 = 0.0;
    std::string exact_arg, fd_arg;

    const auto eq_max = [](const ResidualVector& rv) {
        double m = 0.0;
        for (const auto& v : {rv.eq1, rv.eq2, rv.eq3, rv.eq4, rv.eq5, rv.eq6}) {
            if (v) m = std::max(m, *v);
        }
        return m;
    };

    for (const QFunction& f : functions) {
        for (const GridPoint& p : grid) {
            try {
                const double exact_res = eq_max(characteristic_residuals(f, p.q, step));
                if (exact_res > exact_max) {
                    exact_max = exact_res;
                    exact_arg = f.name() + " at " + to_string(p.q);
                }
                const double fd_res = eq_max(characteristic_residuals(f, p.q, step, 1e-6, true));
                if (fd_res > fd_max) {
                    fd_max = fd_res;
                    fd_arg = f.name() + " at " + to_string(p.q);
                }
                if (p.q.norm() <= 2.0) fd_max_ball2 = std::max(fd_max_ball2, fd_res);
            } catch (const NumericDomainError&) {
                // axis samples for functions undefined there
            }
        }
    }

    const double elapsed = timer.seconds();
    Criterion c;
    c.seconds = elapsed;
    c.pass = exact_max <= 1e-10 && elapsed < 30.0;
    c.detail = fmt("exact-partial max %.2e (tol 1e-10, at %s); fd-route max %.2e at %s "
                   "(%.2e within |q|<=2), %.1f s (limit 30 s)",
                   exact_max, exact_arg.c_str(), fd_max, fd_arg.c_str(), fd_max_ball2, elapsed);
    return c;
}

// ---------------------------------------------------------------------------
// 3. Negative separation: conj has eq-1 residual exactly 2 on the axis; iq
// passes on the i slice and has Cullen residual 2 at 1 + j.
Criterion criterion3() {
    Timer timer;
    Criterion c;

    const auto grid = generate_grid(GridSpec{}, 42);
    const QFunction conj_fn = conjugation_function();
    double worst_conj_dev = 0.0;
    for (const GridPoint& p : grid) {
        if (p.kind != GridPoint::Kind::Axis) continue;
        const ResidualVector rv = characteristic_residuals(conj_fn, p.q, 1e-5);
        if (!rv.eq1) {
            c.detail = "axis sample did not produce eq-1";
            c.seconds = timer.seconds();
            return c;
        }
        worst_conj_dev = std::max(worst_conj_dev, std::abs(*rv.eq1 - 2.0));
    }

    const QFunction iq = left_mult_function("iq", Quaternion::i());
    std::vector<Quaternion> on_slice;
    for (const GridPoint& p : grid) {
        const double r = p.q.vector_norm();
        if (r <= 1e-6) continue;
        if (std::abs(p.q.x) / r >= 1.0 - 1e-9) on_slice.push_back(p.q);
    }
    std::size_t on_slice_failures = 0;
    for (const auto& row : verify_sufficiency(iq, on_slice)) {
        if (row.skipped || !row.pass) ++on_slice_failures;
    }

    const double cullen_14j = cullen_residual(iq, Quaternion(1, 0, 1, 0), 1e-5);
    const double cullen_dev = std::abs(cullen_14j - 2.0);

    c.seconds = timer.seconds();
    c.pass = worst_conj_dev <= 1e-9 && on_slice_failures == 0 && cullen_dev <= 1e-6 &&
             !on_slice.empty();
    c.detail = fmt("conj eq-1 deviation from 2: %.2e (tol 1e-9); iq on-slice points %zu with %zu "
                   "failures; cullen(1+j) deviation %.2e (tol 1e-6)",
                   worst_conj_dev, on_slice.size(), on_slice_failures, cullen_dev);
    return c;
}

// ---------------------------------------------------------------------------
// 4. The three perpendicular routes agree pairwise within 1e-5 on 100
// off-axis, off-pole points; for the slice direction all routes hit 1/r.
Criterion criterion4() {
    Timer timer;
    Rng rng(0xACC4);
    std::vector<Quaternion> points;
    for (int n = 0; n < 100; ++n) points.push_back(random_nonreal(rng, 2.0, 0.3, 0.3));

    std::vector<CatalogEntry> positives;
    for (auto& e : builtin_catalog(42)) {
        if (e.expectation == Expectation::SDerivable) positives.push_back(std::move(e));
    }

    double worst_gap = 0.0, worst_iota_dev = 0.0;
    std::string worst_at;
    for (const CatalogEntry& entry : positives) {
        for (const Quaternion& q : points) {
            const QFunction& f = entry.function;
            const SliceForm s = slice_form(q);
            const Quaternion from_fueter = fueter_apply(partials(f, q, 1e-5)) * -0.5;
            const Quaternion from_iota = partial_iota(f, q, 1e-5) / (2.0 * s.r);
            const Quaternion from_quotient = inverse(q - q.conj()) * (f(q) - f(q.conj()));

            const double gap = std::max({(from_fueter - from_iota).norm(),
                                         (from_fueter - from_quotient).norm(),
                                         (from_iota - from_quotient).norm()});
            if (gap > worst_gap) {
                worst_gap = gap;
                worst_at = entry.name + " at " + to_string(q);
            }
            if (entry.name == "iota") {
                const Quaternion expect(1.0 / s.r);
                worst_iota_dev = std::max({worst_iota_dev, (from_fueter - expect).norm(),
                                           (from_iota - expect).norm(),
                                           (from_quotient - expect).norm()});
            }
        }
    }

    Criterion c;
    c.seconds = timer.seconds();
    c.pass = worst_gap <= 1e-5 && worst_iota_dev <= 1e-8;
    c.detail = fmt("worst pairwise gap %.2e (tol 1e-5, at %s); iota routes vs 1/r: %.2e "
                   "(tol 1e-8)",
                   worst_gap, worst_at.c_str(), worst_iota_dev);
    return c;
}

// ---------------------------------------------------------------------------
// 5. The defining-limit residual drops at least 8x per decade of step across
// the schedule at 50 seeded points, for every regular entry.
Criterion criterion5() {
    Timer timer;
    Rng rng(0xACC5);
    std::vector<Quaternion> points;
    for (int n = 0; n < 50; ++n) points.push_back(random_nonreal(rng, 1.8, 0.3, 0.0));

    std::vector<CatalogEntry> positives;
    for (auto& e : builtin_catalog(42)) {
        if (e.expectation == Expectation::SDerivable) positives.push_back(std::move(e));
    }

    std::size_t violations = 0;
    double worst_ratio = 1e300;
    std::string worst_at;
    for (const CatalogEntry& entry : positives) {
        for (const Quaternion& q : points) {
            const auto [est, trace] = estimate(entry.function, q);
            const double f_scale = std::max(1.0, entry.function(q).norm());
            for (std::size_t i = 0; i + 1 < trace.entries.size(); ++i) {
                const auto& a = trace.entries[i];
                const auto& b = trace.entries[i + 1];
                if (a.residual <= trace_residual_floor(f_scale, a.step) ||
                    b.residual <= trace_residual_floor(f_scale, b.step)) {
                    continue; // at the roundoff floor; nothing left to decrease
                }
                const double hi = a.residual;
                const double lo = b.residual;
                const double ratio = hi / lo;
                if (ratio < worst_ratio) {
                    worst_ratio = ratio;
                    worst_at = entry.name + " at " + to_string(q);
                }
                if (ratio < 8.0) ++violations;
            }
        }
    }

    Criterion c;
    c.seconds = timer.seconds();
    c.pass = violations == 0;
    if (worst_ratio > 1e299) {
        c.detail = "all traces converged to the roundoff floor";
    } else {
        c.detail = fmt("worst per-decade ratio %.2f (need >= 8, at %s), %zu violations",
                       worst_ratio, worst_at.c_str(), violations);
    }
    return c;
}

// ---------------------------------------------------------------------------
// 6. Power-series closed forms: q^3 at i has perpendicular coefficient -1 by
// two routes; q^2 at 1+j has parallel 2+2j and perpendicular 2.
Criterion criterion6() {
    Timer timer;
    const auto monomial = [](std::size_t degree, double radius) {
        std::vector<Quaternion> coeffs(degree + 1);
        coeffs[degree] = Quaternion::one();
        return PowerSeries(std::move(coeffs), radius);
    };

    const PowerSeries cube = monomial(3, 2.0);
    const double quotient_dev = (cube.perp_quotient(Quaternion::i()) - Quaternion(-1)).norm();
    const auto [u3, v3] = cube.slice_decompose(0.0, 1.0);
    const double v_route_dev = (v3 / 1.0 - Quaternion(-1)).norm();

    const PowerSeries square = monomial(2, 4.0);
    const Quaternion at(1, 0, 1, 0);
    const double b_dev =
        (square.termwise_derivative().eval(at) - Quaternion(2, 0, 2, 0)).norm();
    const double c_dev = (square.perp_quotient(at) - Quaternion(2)).norm();

    Criterion c;
    c.seconds = timer.seconds();
    c.pass = quotient_dev <= 1e-9 && v_route_dev <= 1e-9 && b_dev <= 1e-9 && c_dev <= 1e-9;
    c.detail = fmt("q^3 at i: quotient dev %.2e, v/r dev %.2e; q^2 at 1+j: parallel dev %.2e, "
                   "perpendicular dev %.2e (tol 1e-9)",
                   quotient_dev, v_route_dev, b_dev, c_dev);
    return c;
}

// ---------------------------------------------------------------------------
// 7. Order-of-accuracy: halving the step divides the finite-difference error
// by 4 +- 0.5 against the product-rule oracle at 20 seeded points. Degrees
// below 3 are excluded: central differences are exact on quadratics, so no
// second-order term exists to measure.
Criterion criterion7() {
    Timer timer;
    Rng rng(0xACC7);
    double worst_dev = 0.0;
    std::string worst_at;

    for (int n = 0; n < 20; ++n) {
        Quaternion q;
        do {
            q = rng.in_ball(2.0);
        } while (q.norm() < 0.5);
        const unsigned degree = 3 + static_cast<unsigned>(n % 6); // 3..8
        const Axis axis = static_cast<Axis>(n % 4);

        const QFunction f("pow-fd", [degree](const Quaternion& p) {
            Quaternion acc = Quaternion::one();
            for (unsigned m = 0; m < degree; ++m) acc *= p;
            return acc;
        });
        const Quaternion exact = partial_exact_pow(degree, q, axis);
        const double e1 = (partial_fd(f, q, axis, 1e-3) - exact).norm();
        const double e2 = (partial_fd(f, q, axis, 5e-4) - exact).norm();
        const double ratio = e1 / e2;
        const double dev = std::abs(ratio - 4.0);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst_at = fmt("pow%u axis %d at %s (ratio %.3f)", degree, static_cast<int>(axis),
                           to_string(q).c_str(), ratio);
        }
    }

    Criterion c;
    c.seconds = timer.seconds();
    c.pass = worst_dev <= 0.5;
    c.detail = fmt("worst |ratio - 4| = %.3f (tol 0.5) at %s", worst_dev, worst_at.c_str());
    return c;
}

// ---------------------------------------------------------------------------
// 8. Harness gate: the CLI exits 0 on the builtin catalog and two seeded
// runs write byte-identical JSON reports.
Criterion criterion8(const std::string& cli) {
    Timer timer;
    Criterion c;
    if (cli.empty()) {
        c.detail = "no CLI path supplied (argv[1])";
        return c;
    }

    const std::string r1 = "acceptance_run1.json";
    const std::string r2 = "acceptance_run2.json";
    const auto invoke = [&](const std::string& report) {
        const std::string cmd =
            "\"" + cli + "\" check --seed 42 --report " + report + " > /dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc == -1) return -1;
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
    };

    const int code1 = invoke(r1);
    const int code2 = invoke(r2);

    const auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string j1 = slurp(r1);
    const std::string j2 = slurp(r2);

    c.seconds = timer.seconds();
    c.pass = code1 == 0 && code2 == 0 && !j1.empty() && j1 == j2;
    c.detail = fmt("exit codes %d/%d (need 0), reports %zu bytes, byte-identical: %s", code1,
                   code2, j1.size(), j1 == j2 ? "yes" : "NO");
    std::remove(r1.c_str());
    std::remove(r2.c_str());
    return c;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    const char* names[] = {
        "algebraic identity suite",
        "characteristic equations on regular entries",
        "negative separation (conj, iq)",
        "perpendicular-derivative triple agreement",
        "limit-definition convergence rate",
        "power-series closed forms",
        "finite-difference order of accuracy",
        "harness gate (CLI determinism, exit code)",
    };

    std::vector<Criterion> results;
    results.push_back(criterion1());
    results.push_back(criterion2());
    results.push_back(criterion3());
    results.push_back(criterion4());
    results.push_back(criterion5());
    results.push_back(criterion6());
    results.push_back(criterion7());
    results.push_back(criterion8(cli));

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.pass) ++failures;
        std::printf("[%s] criterion %zu: %s — %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", i + 1,
                    names[i], c.detail.c_str(), c.seconds);
    }
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures;
}
