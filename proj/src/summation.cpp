#include "hardy/summation.hpp"

#include <cmath>

namespace hardy {

namespace {

double tree_sum(const double* data, std::size_t n) {
    if (n <= kPairwiseCutoff) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return tree_sum(data, half) + tree_sum(data + half, n - half);
}

// Neumaier's variant of Kahan summation.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    [[nodiscard]] double value() const { return sum + carry; }
};

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return tree_sum(values.data(), values.size());
}

std::vector<double> prefix_sums(std::span<const double> values) {
    std::vector<double> out(values.size() + 1, 0.0);
    Compensated acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc.add(values[i]);
        out[i + 1] = acc.value();
    }
    return out;
}

std::vector<double> suffix_sums(std::span<const double> values) {
    std::vector<double> out(values.size() + 1, 0.0);
    Compensated acc;
    for (std::size_t i = values.size(); i-- > 0;) {
        acc.add(values[i]);
        out[i] = acc.value();
    }
    return out;
}

}  // namespace hardy
