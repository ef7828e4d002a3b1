#include "quasiramsey/graph6.hpp"

#include <cstdint>

#include "quasiramsey/errors.hpp"

namespace quasiramsey {
namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input truncated", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range [63,126]", pos);
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = static_cast<std::uint64_t>(sextet(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 2 + i));
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 1 + i));
    pos += 4;
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder))
    throw ParseError("graph order " + std::to_string(n) + " exceeds limit", 0);

  const int order = static_cast<int>(n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < body) throw ParseError("graph6 body truncated", text.size());
  if (text.size() - pos > body) throw ParseError("trailing bytes after graph6 body", pos + body);

  Graph g(order);
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = sextet(text, at);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + body - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (sextet(text, at) & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", at);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace quasiramsey
