#pragma once

namespace wspec {

/// Parity of the origin-regular solution: starting power x^0 or x^1.
enum class Parity : int { even = 0, odd = 1 };

inline int parity_index(Parity p) noexcept { return static_cast<int>(p); }
inline const char* parity_name(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

/// The oscillator -u'' + (g x^2 + x^{2N}) u = E u restricted to one parity sector.
struct OscillatorSpec {
    double g = 0.0;
    int N = 4;
    Parity parity = Parity::even;

    int nu() const noexcept { return parity_index(parity); }
    double mu() const noexcept { return -0.5 * N; }

    /// Throws InvalidArgument unless N >= 4 and g is finite.
    void validate() const;
};

/// Exponents of the large-x solutions exp(alpha x^{N+1}/(N+1)) x^mu.
/// Only the recessive branch (alpha1) enters the quantization function.
struct AsymptoticExponents {
    double alpha1 = -1.0;
    double alpha2 = 1.0;
    double mu = 0.0;

    static AsymptoticExponents for_degree(int N) noexcept { return {-1.0, 1.0, -0.5 * N}; }
};

/// Exact minimum of g x^2 + x^{2N} over the real line.
double potential_minimum(double g, int N);

} // namespace wspec
