#pragma once

#include <functional>
#include <string>
#include <utility>

#include "sderiv/errors.hpp"
#include "sderiv/quaternion.hpp"
#include "sderiv/slice.hpp"

namespace sderiv {

/// The four coordinate partial derivatives of a quaternion-valued map at a
/// point.
struct PartialDerivatives {
    Quaternion d_t;
    Quaternion d_x;
    Quaternion d_y;
    Quaternion d_z;
};

/// Domain descriptor: all of H, H minus the real axis, or an open ball
/// centered at the origin.
struct FunctionDomain {
    enum class Kind { All, NonReal, Ball };

    Kind kind = Kind::All;
    double radius = 0.0;

    static constexpr FunctionDomain all() { return {Kind::All, 0.0}; }
    static constexpr FunctionDomain non_real() { return {Kind::NonReal, 0.0}; }
    static constexpr FunctionDomain ball(double r) { return {Kind::Ball, r}; }

    bool contains(const Quaternion& q) const {
        switch (kind) {
            case Kind::NonReal: return q.vector_norm() > kRealSliceCutoff;
            case Kind::Ball: return q.norm() < radius;
            case Kind::All: break;
        }
        return true;
    }
};

/// A quaternion-valued function of a quaternion variable. Carries a name,
/// a domain descriptor, optionally an exact-partials routine, and a flag
/// for maps of the form f(t + r iota) = u(t,r) + iota v(t,r).
///
/// Evaluators must be pure; grid sweeps call them concurrently.
class QFunction {
public:
    using Evaluator = std::function<Quaternion(const Quaternion&)>;
    using PartialFn = std::function<PartialDerivatives(const Quaternion&)>;

    QFunction(std::string name, Evaluator eval, FunctionDomain domain = FunctionDomain::all())
        : name_(std::move(name)), eval_(std::move(eval)), domain_(domain) {}

    QFunction& with_exact_partials(PartialFn fn) {
        exact_ = std::move(fn);
        return *this;
    }

    QFunction& mark_slice_preserving() {
        slice_preserving_ = true;
        return *this;
    }

    /// Declares that the map is not C^3; finite-difference error models and
    /// convergence-order checks do not apply to such entries.
    QFunction& mark_non_smooth() {
        smooth_ = false;
        return *this;
    }

    /// Evaluates f(q). Throws DegenerateSlice / OutsideRadius when q is
    /// outside the declared domain.
    Quaternion operator()(const Quaternion& q) const {
        require_in_domain(q);
        return eval_(q);
    }

    const std::string& name() const { return name_; }
    const FunctionDomain& domain() const { return domain_; }
    bool slice_preserving() const { return slice_preserving_; }
    bool smooth() const { return smooth_; }

    bool has_exact_partials() const { return static_cast<bool>(exact_); }

    PartialDerivatives exact_partials(const Quaternion& q) const {
        require_in_domain(q);
        return exact_(q);
    }

private:
    void require_in_domain(const Quaternion& q) const {
        if (domain_.contains(q)) return;
        if (domain_.kind == FunctionDomain::Kind::Ball) {
            throw OutsideRadius(name_ + " evaluated outside its ball of radius " +
                                std::to_string(domain_.radius));
        }
        throw DegenerateSlice(name_ + " evaluated on the real axis");
    }

    std::string name_;
    Evaluator eval_;
    FunctionDomain domain_;
    PartialFn exact_;
    bool slice_preserving_ = false;
    bool smooth_ = true;
};

} // namespace sderiv
