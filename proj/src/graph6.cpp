#include "energych/graph6.hpp"

#include <istream>
#include <ostream>

#include "energych/errors.hpp"

namespace energych {

namespace {
constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::length_error("g6_encode: order above 62 not supported");
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const int header = static_cast<unsigned char>(text[0]);
  if (header < kBias || header > kBias + kGraph6MaxOrder)
    throw ParseError("graph6: invalid order byte", 0);
  const int n = header - kBias;
  const std::size_t need = body_length(n);
  if (text.size() < 1 + need) throw ParseError("graph6: truncated bit body", text.size());
  if (text.size() > 1 + need) throw ParseError("graph6: trailing characters", 1 + need);
  for (std::size_t p = 1; p < text.size(); ++p) {
    const int c = static_cast<unsigned char>(text[p]);
    if (c < kBias || c > kBias + 63) throw ParseError("graph6: invalid body byte", p);
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  const std::size_t pad = need * 6 - k;
  if (pad > 0) {
    const int last = static_cast<unsigned char>(text.back()) - kBias;
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", text.size() - 1);
  }
  return g;
}

std::vector<Graph> read_g6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0, offset = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (view.starts_with(">>")) {
      const auto close = view.find("<<");
      if (close == std::string_view::npos) continue;
      view.remove_prefix(close + 2);
    }
    if (view.empty()) continue;
    try {
      out.push_back(g6_decode(view));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                       line_start + e.position());
    }
  }
  return out;
}

void write_g6_corpus(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << g6_encode(g) << '\n';
}

}  // namespace energych
