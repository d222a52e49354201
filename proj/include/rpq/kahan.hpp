#pragma once

#include <cmath>

namespace rpq {

// Kahan-Neumaier compensated accumulator. Deterministic for a fixed
// summation order; keeps 1e-12-level identity checks honest.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace rpq
