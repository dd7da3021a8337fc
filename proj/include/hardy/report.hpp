#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardy/bounds.hpp"
#include "hardy/core.hpp"

namespace hardy {

using ordered_json = nlohmann::ordered_json;

/// Relative tolerance of the reported sandwich check.
inline constexpr double kSandwichTol = 1e-9;

/// One machine-readable result: the two-sided estimate for a case, an
/// optional variational estimate, and the parameters that produced it.
struct Report {
    BoundaryCase kase = BoundaryCase::ND;
    double p = 2.0;
    double q = 2.0;
    double b_lower = 0.0;
    double b_upper = 0.0;
    std::optional<double> k_factor;
    std::optional<double> opic_b;
    std::optional<double> a_hat;
    std::optional<double> oracle_value;
    SupResult argmax_lower;
    SupResult argmax_upper;
    std::optional<SupResult> argmax_opic;
    std::optional<double> tail_increment;
    std::vector<std::pair<std::string, double>> timings_ms;
    ordered_json params = ordered_json::object();
    ordered_json extra = ordered_json::object();

    [[nodiscard]] static Report from_bounds(const BoundsReport& b);

    /// bLower <= aHat + tol*scale and aHat <= k bUpper (1 + tol) when aHat is
    /// present; otherwise bLower <= k bUpper (1 + tol). Without k (p > q) only
    /// the lower half is checked.
    [[nodiscard]] bool sandwich_ok() const;

    [[nodiscard]] ordered_json to_json(bool with_timings = true) const;
};

}  // namespace hardy
