#include "energych/charpoly.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace energych {

namespace {

using Wide = __int128;
using WidePoly = std::vector<Wide>;

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("characteristic polynomial overflow");
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("characteristic polynomial overflow");
  return r;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("characteristic polynomial coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

WidePoly widen(const IntPolynomial& p) { return {p.begin(), p.end()}; }

// Divides by (x - r); false when r is not a root.
bool deflate_linear(WidePoly& p, Wide r) {
  if (p.size() < 2) return false;
  WidePoly q(p.size() - 1);
  Wide acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc = checked_add(checked_mul(acc, r), p[i]);
    q[i] = acc;
  }
  if (checked_add(checked_mul(acc, r), p.back()) != 0) return false;
  p = std::move(q);
  return true;
}

// Divides by the monic x^2 - s x + t; false when the remainder is nonzero.
bool deflate_quadratic(WidePoly& p, Wide s, Wide t) {
  if (p.size() < 3) return false;
  WidePoly work = p;
  WidePoly q(p.size() - 2);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Wide lead = work[i];
    q[i] = lead;
    work[i + 1] = checked_add(work[i + 1], checked_mul(lead, s));
    work[i + 2] = checked_add(work[i + 2], checked_mul(-lead, t));
  }
  if (work[work.size() - 2] != 0 || work.back() != 0) return false;
  p = std::move(q);
  return true;
}

bool is_square(std::int64_t d) {
  if (d < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
    if (c * c == d) return true;
  return false;
}

}  // namespace

IntPolynomial char_poly_exact(const Graph& g) {
  const int n = g.order();
  if (n > kCharPolyMaxOrder)
    throw std::length_error("char_poly_exact: order " + std::to_string(n) + " above 16");
  std::vector<Wide> m(static_cast<std::size_t>(n) * n, 0), am(m.size(), 0);
  auto at = [n](std::vector<Wide>& v, int i, int j) -> Wide& {
    return v[static_cast<std::size_t>(i) * n + j];
  };
  std::vector<Wide> coeff(n + 1, 0);
  coeff[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, with M_0 = 0.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Wide acc = 0;
        for (VertexSet s = g.neighbors(i); s; s &= s - 1) acc = checked_add(acc, at(m, lowest(s), j));
        at(am, i, j) = acc;
      }
    for (int i = 0; i < n; ++i) at(am, i, i) = checked_add(at(am, i, i), coeff[k - 1]);
    std::swap(m, am);
    // c_k = -tr(A M_k) / k
    Wide trace = 0;
    for (int i = 0; i < n; ++i)
      for (VertexSet s = g.neighbors(i); s; s &= s - 1) trace = checked_add(trace, at(m, lowest(s), i));
    if (trace % k != 0) throw std::logic_error("char_poly_exact: inexact Faddeev-LeVerrier step");
    coeff[k] = -trace / k;
  }
  IntPolynomial out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = narrow(coeff[i]);
  return out;
}

double evaluate(const IntPolynomial& p, double x) {
  double acc = 0.0;
  for (auto c : p) acc = acc * x + static_cast<double>(c);
  return acc;
}

bool validate_integer_roots(const Graph& g, std::span<const std::int64_t> candidates) {
  WidePoly p = widen(char_poly_exact(g));
  for (auto r : candidates)
    if (!deflate_linear(p, r)) return false;
  return true;
}

std::int64_t ExactSpectrum::integer_energy() const {
  std::int64_t e = 0;
  for (auto r : integer_roots) e += r < 0 ? -r : r;
  for (const auto& q : quadratics)
    if (q.product > 0) e += q.sum < 0 ? -q.sum : q.sum;
  return e;
}

std::vector<std::int64_t> ExactSpectrum::surds() const {
  std::vector<std::int64_t> out;
  for (const auto& q : quadratics)
    if (q.product < 0) out.push_back(q.sum * q.sum - 4 * q.product);
  return out;
}

std::optional<ExactSpectrum> exact_spectrum(const Graph& g, const Spectrum& approx,
                                            double tolerance) {
  if (g.order() > kCharPolyMaxOrder) return std::nullopt;
  WidePoly p = widen(char_poly_exact(g));
  ExactSpectrum out;
  std::vector<double> rest;
  for (double v : approx.values) {
    const double r = std::round(v);
    if (std::abs(v - r) < tolerance && deflate_linear(p, static_cast<Wide>(r)))
      out.integer_roots.push_back(static_cast<std::int64_t>(r));
    else
      rest.push_back(v);
  }
  std::vector<bool> used(rest.size(), false);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (used[j]) continue;
      const double s = rest[i] + rest[j], t = rest[i] * rest[j];
      const double rs = std::round(s), rt = std::round(t);
      if (std::abs(s - rs) >= tolerance || std::abs(t - rt) >= tolerance) continue;
      const auto si = static_cast<std::int64_t>(rs), ti = static_cast<std::int64_t>(rt);
      if (is_square(si * si - 4 * ti)) continue;
      if (!deflate_quadratic(p, si, ti)) continue;
      out.quadratics.push_back({si, ti});
      used[i] = used[j] = true;
      break;
    }
    if (!used[i]) return std::nullopt;
  }
  if (p.size() != 1 || p[0] != 1) return std::nullopt;
  return out;
}

std::optional<int> compare_energy_exact(const Graph& g, const Spectrum& approx,
                                        std::int64_t target) {
  const auto exact = exact_spectrum(g, approx);
  if (!exact) return std::nullopt;
  const std::int64_t base = exact->integer_energy() - target;
  const auto surds = exact->surds();
  if (surds.empty()) return base < 0 ? -1 : (base > 0 ? 1 : 0);
  // A positive combination of square roots of non-squares is irrational, so
  // the difference is nonzero and 50 digits settle its sign.
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec total = Dec(base);
  for (auto d : surds) total += boost::multiprecision::sqrt(Dec(d));
  if (boost::multiprecision::abs(total) < Dec("1e-40")) return std::nullopt;
  return total < 0 ? -1 : 1;
}

}  // namespace energych
