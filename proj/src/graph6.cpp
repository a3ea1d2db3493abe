#include "fograph/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace fograph {

namespace {

void append_bits(std::string& out, uint64_t value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 63) + 63));
}

class BitReader {
 public:
  BitReader(const std::string& text, size_t pos) : text_(text), pos_(pos) {}

  int next() {
    if (bit_ == 0) {
      if (pos_ >= text_.size())
        throw std::invalid_argument("graph6: truncated at byte " +
                                    std::to_string(pos_));
      int c = static_cast<unsigned char>(text_[pos_]);
      if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: invalid byte at position " +
                                    std::to_string(pos_));
      cur_ = c - 63;
      bit_ = 6;
      ++pos_;
    }
    --bit_;
    return (cur_ >> bit_) & 1;
  }

  size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  size_t pos_;
  int cur_ = 0;
  int bit_ = 0;
};

}  // namespace

std::string to_graph6(const Graph& g) {
  uint64_t n = static_cast<uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    append_bits(out, n, 18);
  } else {
    out.push_back(126);
    out.push_back(126);
    append_bits(out, n, 36);
  }
  int acc = 0, accbits = 0;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++accbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        accbits = 0;
      }
    }
  if (accbits > 0)
    out.push_back(static_cast<char>((acc << (6 - accbits)) + 63));
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::string text = raw;
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  uint64_t n = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= text.size())
      throw std::invalid_argument("graph6: truncated header");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: invalid byte at position " +
                                  std::to_string(i));
    return c - 63;
  };
  if (byte(0) != 63) {
    n = static_cast<uint64_t>(byte(0));
    pos = 1;
  } else if (byte(1) != 63) {
    n = (static_cast<uint64_t>(byte(1)) << 12) |
        (static_cast<uint64_t>(byte(2)) << 6) | static_cast<uint64_t>(byte(3));
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i)
      n = (n << 6) | static_cast<uint64_t>(byte(i));
    pos = 8;
  }
  if (n < 1) throw std::invalid_argument("graph6: order must be positive");

  BitReader bits(text, pos);
  std::vector<std::pair<int, int>> edges;
  for (uint64_t v = 1; v < n; ++v)
    for (uint64_t u = 0; u < v; ++u)
      if (bits.next())
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  if (bits.pos() != text.size())
    throw std::invalid_argument("graph6: trailing bytes at position " +
                                std::to_string(bits.pos()));
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n) || n < 1)
        throw std::invalid_argument("edge-list: bad order at line " +
                                    std::to_string(lineno));
      continue;
    }
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("edge-list: bad vertex at line " +
                                  std::to_string(lineno));
    }
    if (!(ls >> v))
      throw std::invalid_argument("edge-list: missing endpoint at line " +
                                  std::to_string(lineno));
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (n < 0) n = max_vertex + 1;
  if (n < 1) throw std::invalid_argument("edge-list: empty graph input");
  return Graph(n, edges);
}

}  // namespace fograph
