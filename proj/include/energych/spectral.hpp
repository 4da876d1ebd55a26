#ifndef ENERGYCH_SPECTRAL_HPP
#define ENERGYCH_SPECTRAL_HPP

#include <vector>

#include "energych/graph.hpp"

namespace energych {

inline constexpr double kDefaultTolerance = 1e-6;

// Adjacency eigenvalues sorted descending, with the residuals of the solve.
struct Spectrum {
  std::vector<double> values;
  double trace_error = 0.0;       // |sum lambda_i|
  double frob_error = 0.0;        // |sum lambda_i^2 - 2m|
  double offdiag_residual = 0.0;  // off-diagonal Frobenius norm after the last sweep

  int order() const { return static_cast<int>(values.size()); }
};

struct EnergyValue {
  double value = 0.0;
  bool borderline = false;  // within tolerance of an even integer
};

// Cyclic Jacobi rotations; throws ConvergenceError past 100 sweeps or when
// the trace/Frobenius quality gate fails.
Spectrum eigenvalues(const Graph& g);

double energy_of(const Spectrum& s);
EnergyValue energy(const Graph& g, double tolerance = kDefaultTolerance);

// k is 1-based: lambda_k(g, 1) is the spectral radius.
double lambda_k(const Graph& g, int k);
double lambda_k(const Spectrum& s, int k);

struct InterlacingCheck {
  bool holds = true;
  double max_violation = 0.0;
};

// lambda_i(G) >= lambda_i(H) >= lambda_{i+n-m}(G) for H = g[s].
InterlacingCheck check_interlacing(const Graph& g, VertexSet s, double slack = 1e-8);

}  // namespace energych

#endif  // ENERGYCH_SPECTRAL_HPP
