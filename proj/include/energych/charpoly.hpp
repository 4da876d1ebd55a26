#ifndef ENERGYCH_CHARPOLY_HPP
#define ENERGYCH_CHARPOLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "energych/graph.hpp"
#include "energych/spectral.hpp"

namespace energych {

// Coefficients highest degree first: {1, c1, ..., cn} is x^n + c1 x^(n-1) + ... + cn.
using IntPolynomial = std::vector<std::int64_t>;

inline constexpr int kCharPolyMaxOrder = 16;

// Faddeev-LeVerrier in 128-bit integer arithmetic; every division is exact.
IntPolynomial char_poly_exact(const Graph& g);

double evaluate(const IntPolynomial& p, double x);

// True iff each candidate is a root of the characteristic polynomial, counted
// with multiplicity (each accepted root is deflated before the next is tested).
bool validate_integer_roots(const Graph& g, std::span<const std::int64_t> candidates);

// x^2 - sum*x + product, irreducible over the integers.
struct QuadraticFactor {
  std::int64_t sum = 0;
  std::int64_t product = 0;
};

// A spectrum proven exactly: the characteristic polynomial equals the product
// of (x - r) over integer_roots times every quadratic factor.
struct ExactSpectrum {
  std::vector<std::int64_t> integer_roots;
  std::vector<QuadraticFactor> quadratics;

  // energy = integer_energy + sum of sqrt(d) over surds
  std::int64_t integer_energy() const;
  std::vector<std::int64_t> surds() const;
};

// Rounds the floating spectrum to integers and integer quadratic pairs and
// proves the factorisation by exact division. Empty when it does not factor.
std::optional<ExactSpectrum> exact_spectrum(const Graph& g, const Spectrum& approx,
                                            double tolerance = kDefaultTolerance);

// Sign of E(g) - target decided exactly, or empty when the spectrum is not
// integer/quadratic.
std::optional<int> compare_energy_exact(const Graph& g, const Spectrum& approx,
                                        std::int64_t target);

}  // namespace energych

#endif  // ENERGYCH_CHARPOLY_HPP
