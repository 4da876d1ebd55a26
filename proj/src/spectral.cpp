#include "energych/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "energych/errors.hpp"

namespace energych {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeStop = 1e-12;
constexpr double kTraceGate = 1e-9;
constexpr double kFrobGate = 1e-8;

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int size() const { return n_; }

  double offdiag_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
  }

  // Zeroes entry (p, q) with a plane rotation applied on both sides.
  void rotate(int p, int q) {
    const double apq = (*this)(p, q);
    if (apq == 0.0) return;
    const double theta = ((*this)(q, q) - (*this)(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    for (int k = 0; k < n_; ++k) {
      const double akp = (*this)(k, p), akq = (*this)(k, q);
      (*this)(k, p) = c * akp - s * akq;
      (*this)(k, q) = s * akp + c * akq;
    }
    for (int k = 0; k < n_; ++k) {
      const double apk = (*this)(p, k), aqk = (*this)(q, k);
      (*this)(p, k) = c * apk - s * aqk;
      (*this)(q, k) = s * apk + c * aqk;
    }
    (*this)(p, q) = (*this)(q, p) = 0.0;
  }

 private:
  int n_;
  std::vector<double> a_;
};

}  // namespace

Spectrum eigenvalues(const Graph& g) {
  const int n = g.order();
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.has_edge(i, j) ? 1.0 : 0.0;

  const double initial = a.offdiag_norm();
  double off = initial;
  int sweeps = 0;
  while (off > kRelativeStop * initial) {
    if (++sweeps > kMaxSweeps)
      throw ConvergenceError("Jacobi sweep cap reached with off-diagonal norm " +
                             std::to_string(off));
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) a.rotate(p, q);
    off = a.offdiag_norm();
  }

  Spectrum s;
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = a(i, i);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  const double sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
  const double sq = std::inner_product(s.values.begin(), s.values.end(), s.values.begin(), 0.0);
  s.trace_error = std::abs(sum);
  s.frob_error = std::abs(sq - 2.0 * g.edge_count());
  s.offdiag_residual = off;
  if (n <= 16 && (s.trace_error > kTraceGate || s.frob_error > kFrobGate))
    throw ConvergenceError("eigenvalue quality gate failed (trace " +
                           std::to_string(s.trace_error) + ", frobenius " +
                           std::to_string(s.frob_error) + ")");
  return s;
}

double energy_of(const Spectrum& s) {
  double e = 0.0;
  for (double v : s.values) e += std::abs(v);
  return e;
}

EnergyValue energy(const Graph& g, double tolerance) {
  const double e = energy_of(eigenvalues(g));
  const double nearest_even = 2.0 * std::round(e / 2.0);
  return {e, std::abs(e - nearest_even) < tolerance};
}

double lambda_k(const Spectrum& s, int k) {
  if (k < 1 || k > s.order())
    throw std::out_of_range("lambda_k: index " + std::to_string(k) + " outside [1, " +
                            std::to_string(s.order()) + "]");
  return s.values[k - 1];
}

double lambda_k(const Graph& g, int k) {
  if (k < 1 || k > g.order())
    throw std::out_of_range("lambda_k: index " + std::to_string(k) + " outside [1, " +
                            std::to_string(g.order()) + "]");
  return lambda_k(eigenvalues(g), k);
}

InterlacingCheck check_interlacing(const Graph& g, VertexSet s, double slack) {
  const Spectrum host = eigenvalues(g);
  const Spectrum sub = eigenvalues(induced_subgraph(g, s));
  const int n = host.order(), m = sub.order();
  InterlacingCheck out;
  for (int i = 0; i < m; ++i) {
    const double upper = sub.values[i] - host.values[i];
    const double lower = host.values[i + n - m] - sub.values[i];
    out.max_violation = std::max({out.max_violation, upper, lower});
  }
  out.holds = out.max_violation <= slack;
  return out;
}

}  // namespace energych
