#include "hardy/report.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

namespace {

ordered_json index_json(BoundaryCase c, const SupResult& s) {
    if (c == BoundaryCase::ND || c == BoundaryCase::DN) return s.x;
    return ordered_json::array({s.x, s.y});
}

template <typename T>
ordered_json maybe(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

Report Report::from_bounds(const BoundsReport& b) {
    Report r;
    r.kase = b.kase;
    r.p = b.p;
    r.q = b.q;
    r.b_lower = b.b_lower();
    r.b_upper = b.b_upper();
    if (b.k) r.k_factor = b.k->value;
    if (b.opic) {
        r.opic_b = b.opic->value;
        r.argmax_opic = *b.opic;
    }
    r.argmax_lower = b.lower;
    r.argmax_upper = b.upper;
    return r;
}

bool Report::sandwich_ok() const {
    const double scale = std::max({std::abs(b_lower), std::abs(b_upper), 1e-300});
    if (a_hat) {
        if (!(b_lower <= *a_hat + kSandwichTol * scale)) return false;
        return !k_factor || *a_hat <= *k_factor * b_upper * (1.0 + kSandwichTol);
    }
    return !k_factor || b_lower <= *k_factor * b_upper * (1.0 + kSandwichTol);
}

ordered_json Report::to_json(bool with_timings) const {
    ordered_json j;
    j["case"] = std::string(case_name(kase));
    j["p"] = p;
    j["q"] = q;
    j["bLower"] = b_lower;
    j["bUpper"] = b_upper;
    j["kFactor"] = maybe(k_factor);
    j["opicB"] = maybe(opic_b);
    j["aHat"] = maybe(a_hat);
    j["sandwichOk"] = sandwich_ok();
    ordered_json arg;
    arg["lower"] = index_json(kase, argmax_lower);
    arg["upper"] = index_json(kase, argmax_upper);
    if (argmax_opic) arg["opic"] = index_json(kase, *argmax_opic);
    j["argmax"] = std::move(arg);
    if (oracle_value) {
        j["oracleValue"] = *oracle_value;
        j["oracleGap"] = a_hat ? ordered_json(std::abs(*a_hat - *oracle_value) / *oracle_value)
                               : ordered_json(nullptr);
    }
    j["tailIncrement"] = maybe(tail_increment);
    if (with_timings) {
        ordered_json t = ordered_json::object();
        for (const auto& [name, ms] : timings_ms) t[name] = ms;
        j["timings"] = std::move(t);
    }
    j["params"] = params;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    return j;
}

}  // namespace hardy
