#include "wspec/oscillator.hpp"

#include <cmath>
#include <string>

#include "wspec/errors.hpp"

namespace wspec {

void OscillatorSpec::validate() const
{
    if (N < 4) {
        throw InvalidArgument("N must be at least 4, got " + std::to_string(N));
    }
    if (!std::isfinite(g)) {
        throw InvalidArgument("coupling g must be finite");
    }
}

double potential_minimum(double g, int N)
{
    if (g >= 0.0) {
        return 0.0;
    }
    // 2 g x + 2 N x^{2N-1} = 0  =>  x^2 = (-g/N)^{1/(N-1)}
    const double x2 = std::pow(-g / N, 1.0 / (N - 1));
    return g * x2 * (1.0 - 1.0 / N);
}

} // namespace wspec
