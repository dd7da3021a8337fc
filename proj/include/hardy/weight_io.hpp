#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

/// Raw weights as stored on disk, before they are tied to an exponent p.
struct WeightFile {
    Index offset = 0;
    std::vector<double> u;
    std::vector<double> v;

    /// Validates the entries and builds the interval for exponent p.
    [[nodiscard]] WeightedInterval to_interval(double p) const;
    [[nodiscard]] static WeightFile from_interval(const WeightedInterval& w);
};

/// {"offset": int, "u": [...], "v": [...]}; throws BadInput naming the offending entry.
[[nodiscard]] WeightFile parse_weights_json(const std::string& text);
/// Header "n,u,v" then one row per index, contiguous in n.
[[nodiscard]] WeightFile parse_weights_csv(const std::string& text);

/// Chooses the parser from the extension (.csv) or, failing that, the first character.
[[nodiscard]] WeightFile read_weights(const std::filesystem::path& path);

[[nodiscard]] std::string weights_to_json(const WeightFile& f);
[[nodiscard]] std::string weights_to_csv(const WeightFile& f);

void write_weights(const std::filesystem::path& path, const WeightFile& f);

}  // namespace hardy
