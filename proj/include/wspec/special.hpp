#pragma once

namespace wspec {

/// Real-argument gamma function.
double gamma_function(double x);

} // namespace wspec
