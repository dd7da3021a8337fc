#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hardy {

/// Inputs at most this long are summed left to right.
inline constexpr std::size_t kPairwiseCutoff = 1024;

/// Pairwise (tree) sum; plain loop below kPairwiseCutoff.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// Compensated running sums. prefix[k] = values[0] + ... + values[k-1], so the
/// result has values.size() + 1 entries and prefix[0] == 0.
[[nodiscard]] std::vector<double> prefix_sums(std::span<const double> values);

/// suffix[k] = values[k] + ... + values[n-1]; suffix[n] == 0.
[[nodiscard]] std::vector<double> suffix_sums(std::span<const double> values);

}  // namespace hardy
