#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sderiv/power_series.hpp"
#include "sderiv/qfunction.hpp"
#include "sderiv/slice.hpp"

namespace sderiv {

/// What the verification run is expected to conclude about an entry.
enum class Expectation {
    SDerivable,    ///< every mandatory check must pass on the entry's domain
    NotSDerivable, ///< at least one mandatory check must fail somewhere
    SliceOnly,     ///< passes exactly on the distinguished slice
};

std::string_view expectation_name(Expectation e);

struct CatalogEntry {
    std::string name;
    QFunction function;
    Expectation expectation;
    std::optional<UnitImaginary> slice; ///< SliceOnly: the distinguished slice direction
    std::optional<PowerSeries> series;  ///< set for series-backed entries
    std::string notes;
};

/// q^n with exact product-rule partials.
QFunction power_function(unsigned n);

/// q -> iota(q), the slice direction itself; defined off the real axis.
QFunction iota_function();

/// q -> q a + b.
QFunction linear_function(const Quaternion& a, const Quaternion& b);

/// q -> conj(q).
QFunction conjugation_function();

/// q -> a q.
QFunction left_mult_function(std::string name, const Quaternion& a);

/// Truncated exponential sum q^k / k!.
PowerSeries exponential_series(std::size_t order = 64, double radius = 4.0);

/// The builtin test functions with their expectations. The random
/// coefficients of the linear and left-multiplication entries are drawn
/// deterministically from `seed`.
std::vector<CatalogEntry> builtin_catalog(std::uint64_t seed);

} // namespace sderiv
