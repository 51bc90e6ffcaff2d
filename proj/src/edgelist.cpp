#include <algorithm>
#include <charconv>
#include <string>

#include "gallai/errors.hpp"
#include "gallai/io.hpp"

namespace gallai {

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t values[2];
    int found = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (found == 2) throw ParseError("more than two fields on an edge line", line_start + i);
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), values[found]);
      if (ec != std::errc() || ptr == line.data() + i) {
        throw ParseError("expected a non-negative vertex index", line_start + i);
      }
      i = static_cast<std::size_t>(ptr - line.data());
      ++found;
    }
    if (found == 1) throw ParseError("edge line needs two vertex indices", line_start);
    if (found == 2) {
      if (values[0] == values[1]) throw ParseError("self-loop", line_start);
      edges.emplace_back(values[0], values[1]);
      n = std::max({n, values[0] + 1, values[1] + 1});
    }
    line_start = line_end + 1;
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace gallai
