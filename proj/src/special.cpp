#include "wspec/special.hpp"

#include <cmath>

namespace wspec {

double gamma_function(double x)
{
    return std::tgamma(x);
}

} // namespace wspec
