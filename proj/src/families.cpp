#include "energych/families.hpp"

#include <charconv>
#include <stdexcept>

#include "energych/canon.hpp"

namespace energych {

namespace {

void require(bool ok, const FamilySpec& spec) {
  if (!ok) throw std::invalid_argument("family parameters out of range: " + spec.to_string());
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.front() < '0' || s.front() > '9') return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool matches(const Graph& h, const Graph& candidate) {
  return h.order() == candidate.order() && h.edge_count() == candidate.edge_count() &&
         h.degree_sequence() == candidate.degree_sequence() && is_isomorphic(h, candidate);
}

}  // namespace

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::Complete: return "K" + std::to_string(a);
    case FamilyKind::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::Path: return "P" + std::to_string(a);
    case FamilyKind::Cycle: return "C" + std::to_string(a);
    case FamilyKind::A: return "A" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::B: return "B" + std::to_string(a);
    case FamilyKind::TriangleTwoPendants: return "tri2p";
    case FamilyKind::TwoK2: return "2K2";
    case FamilyKind::K24Pendant: return "H";
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete:
      require(spec.a >= 1 && spec.a <= Graph::kMaxOrder, spec);
      return complete(spec.a);
    case FamilyKind::CompleteBipartite:
      require(spec.a >= 1 && spec.b >= 1 && spec.a + spec.b <= Graph::kMaxOrder, spec);
      return join(Graph(spec.a), Graph(spec.b));
    case FamilyKind::Path: {
      require(spec.a >= 1 && spec.a <= Graph::kMaxOrder, spec);
      Graph g(spec.a);
      for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case FamilyKind::Cycle: {
      require(spec.a >= 3 && spec.a <= Graph::kMaxOrder, spec);
      Graph g(spec.a);
      for (int v = 0; v < spec.a; ++v) g.add_edge(v, (v + 1) % spec.a);
      return g;
    }
    case FamilyKind::A: {
      require(spec.b >= 1 && spec.b <= spec.a - 1 && spec.a + 1 <= Graph::kMaxOrder, spec);
      Graph g = disjoint_union(complete(spec.a), Graph(1));
      for (int v = 0; v < spec.b; ++v) g.add_edge(v, spec.a);
      return g;
    }
    case FamilyKind::B: {
      require(spec.a >= 1 && spec.a + 2 <= Graph::kMaxOrder, spec);
      Graph g = disjoint_union(complete(spec.a), Graph(2));
      g.add_edge(0, spec.a);
      g.add_edge(0, spec.a + 1);
      return g;
    }
    case FamilyKind::TriangleTwoPendants: {
      Graph g = disjoint_union(complete(3), Graph(2));
      g.add_edge(0, 3);
      g.add_edge(1, 4);
      return g;
    }
    case FamilyKind::TwoK2:
      return disjoint_union(complete(2), complete(2));
    case FamilyKind::K24Pendant: {
      Graph g = disjoint_union(join(Graph(2), Graph(4)), Graph(1));
      g.add_edge(0, 6);
      return g;
    }
  }
  throw std::invalid_argument("unknown family kind");
}

std::optional<FamilySpec> parse_family(std::string_view text) {
  if (text == "tri2p") return FamilySpec{FamilyKind::TriangleTwoPendants};
  if (text == "2K2") return FamilySpec{FamilyKind::TwoK2};
  if (text == "H") return FamilySpec{FamilyKind::K24Pendant};
  if (text.size() < 2) return std::nullopt;
  const char head = text[0];
  const std::string_view rest = text.substr(1);
  const auto comma = rest.find(',');
  int a = 0, b = 0;
  if (comma == std::string_view::npos) {
    if (!parse_int(rest, a)) return std::nullopt;
    switch (head) {
      case 'K': return FamilySpec{FamilyKind::Complete, a};
      case 'P': return FamilySpec{FamilyKind::Path, a};
      case 'C': return FamilySpec{FamilyKind::Cycle, a};
      case 'B': return FamilySpec{FamilyKind::B, a};
      default: return std::nullopt;
    }
  }
  if (!parse_int(rest.substr(0, comma), a) || !parse_int(rest.substr(comma + 1), b))
    return std::nullopt;
  switch (head) {
    case 'K': return FamilySpec{FamilyKind::CompleteBipartite, a, b};
    case 'A': return FamilySpec{FamilyKind::A, a, b};
    default: return std::nullopt;
  }
}

FamilySpec ExceptionWitness::family() const {
  switch (item) {
    case ExceptionItem::Complete: return {FamilyKind::Complete, n};
    case ExceptionItem::B: return {FamilyKind::B, n};
    case ExceptionItem::A: return {FamilyKind::A, n, t};
    case ExceptionItem::TriangleTwoPendants: return {FamilyKind::TriangleTwoPendants};
    case ExceptionItem::K24: return {FamilyKind::CompleteBipartite, 2, 4};
  }
  return {};
}

std::string ExceptionWitness::to_string() const {
  static constexpr const char* kRoman[] = {"i", "ii", "iii", "iv", "v"};
  return std::string(kRoman[static_cast<int>(item)]) + ":" + family().to_string();
}

Graph regenerate(const ExceptionWitness& w) {
  return disjoint_union(generate(w.family()), Graph(w.isolated_count));
}

bool a_family_is_exception(int n, int t) {
  if (t < 1 || t > n - 1) return false;
  if (n <= 7) return !(n == 7 && t == 4);
  return t == 1 || t == 2 || t == n - 1;
}

std::optional<ExceptionWitness> classify_chi_exception(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto [h, isolated] = strip_isolated(g);
  const int order = h.order();
  if (order == 0) return ExceptionWitness{ExceptionItem::Complete, 1, 0, g.order() - 1};

  if (matches(h, complete(order)))
    return ExceptionWitness{ExceptionItem::Complete, order, 0, isolated};
  if (order >= 3 && matches(h, generate({FamilyKind::B, order - 2})))
    return ExceptionWitness{ExceptionItem::B, order - 2, 0, isolated};
  const int n = order - 1;
  for (int t = 1; t <= n - 1; ++t)
    if (a_family_is_exception(n, t) && matches(h, generate({FamilyKind::A, n, t})))
      return ExceptionWitness{ExceptionItem::A, n, t, isolated};
  if (order == 5 && matches(h, generate({FamilyKind::TriangleTwoPendants})))
    return ExceptionWitness{ExceptionItem::TriangleTwoPendants, 0, 0, isolated};
  return std::nullopt;
}

std::optional<ExceptionWitness> classify_ch_exception(const Graph& g) {
  if (auto w = classify_chi_exception(g)) return w;
  if (g.order() == 0) return std::nullopt;
  const auto [h, isolated] = strip_isolated(g);
  if (h.order() == 6 && matches(h, generate({FamilyKind::CompleteBipartite, 2, 4})))
    return ExceptionWitness{ExceptionItem::K24, 0, 0, isolated};
  return std::nullopt;
}

}  // namespace energych
