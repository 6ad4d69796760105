#pragma once

#include <cmath>

namespace wspec {

/// Running sum built on the TwoSum error-free transformation. The rounding
/// error of every addition is collected exactly and folded back on read.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) noexcept
    {
        const double s = sum_ + x;
        const double bp = s - sum_;
        const double err = (sum_ - (s - bp)) + (x - bp);
        sum_ = s;
        correction_ += err;
        return *this;
    }

    double value() const noexcept { return sum_ + correction_; }
    explicit operator double() const noexcept { return value(); }

private:
    double sum_ = 0.0;
    double correction_ = 0.0;
};

} // namespace wspec
