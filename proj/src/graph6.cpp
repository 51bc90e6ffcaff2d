#include <string>

#include "gallai/errors.hpp"
#include "gallai/io.hpp"

namespace gallai {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input ends early", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside 63..126", pos);
  return c - kBias;
}

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int words = n <= 258047 ? 3 : 6;
  out.push_back(126);
  if (words == 6) out.push_back(126);
  for (int i = words - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0 && is_space(text[end - 1])) --end;
  text = text.substr(0, end);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);
  if (text[pos] == ':') throw ParseError("sparse6 input is not supported", pos);
  if (text[pos] == '&') throw ParseError("digraph6 input is not supported", pos);
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '\n') throw ParseError("graph6 input holds more than one line", i);
  }

  std::size_t n = 0;
  if (sextet(text, pos) != 63) {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && sextet(text, pos + 1) == 63) {
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + 2 + i));
    if (n <= 258047) throw ParseError("non-canonical 8-byte size prefix", pos);
    pos += 8;
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + 1 + i));
    if (n <= 62) throw ParseError("non-canonical 4-byte size prefix", pos);
    pos += 4;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes for " + std::to_string(n) +
                         " vertices, found " + std::to_string(text.size() - pos),
                     text.size() - pos < bytes ? text.size() : pos + bytes);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int word = sextet(text, pos + bit / 6);
      if (word & (0x20 >> (bit % 6))) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const int padding_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text, last) & padding_mask) throw ParseError("nonzero padding bits", last);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int word = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace gallai
