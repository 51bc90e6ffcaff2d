#include "gallai/generators.hpp"

#include <bit>
#include <string>

#include "gallai/errors.hpp"

namespace gallai {

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<Edge> two_subsets(std::size_t m) {
  std::vector<Edge> subsets;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) subsets.emplace_back(a, b);
  }
  return subsets;
}

template <typename Pred>
Graph from_predicate(std::size_t n, Pred&& adjacent) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::size_t arg(std::string_view name, std::span<const std::int64_t> params, std::size_t index,
                std::int64_t minimum) {
  if (params[index] < minimum) {
    throw InputError(std::string(name) + ": parameter " + std::to_string(index + 1) + " must be >= " +
                     std::to_string(minimum) + ", got " + std::to_string(params[index]));
  }
  return static_cast<std::size_t>(params[index]);
}

void expect_arity(std::string_view name, std::span<const std::int64_t> params, std::size_t arity) {
  if (params.size() != arity) {
    throw InputError(std::string(name) + " takes " + std::to_string(arity) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  return from_predicate(n, [](std::size_t, std::size_t) { return true; });
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  return from_predicate(a + b, [a](std::size_t i, std::size_t j) { return (i < a) != (j < a); });
}

Graph petersen() {
  const auto pairs = two_subsets(5);
  return from_predicate(pairs.size(), [&](std::size_t i, std::size_t j) {
    const Edge &x = pairs[i], &y = pairs[j];
    return !x.incident_to(y.u) && !x.incident_to(y.v);
  });
}

Graph paley(std::size_t q) {
  if (!is_prime(q)) throw InputError("paley: q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) throw InputError("paley: q = " + std::to_string(q) + " is not 1 mod 4");
  std::vector<std::uint8_t> residue(q, 0);
  for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = 1;
  return from_predicate(q, [&](std::size_t i, std::size_t j) { return residue[j - i] != 0; });
}

Graph octahedron() {
  return from_predicate(6, [](std::size_t i, std::size_t j) { return i / 2 != j / 2; });
}

Graph rook(std::size_t m) {
  return from_predicate(m * m, [m](std::size_t i, std::size_t j) {
    return i / m == j / m || i % m == j % m;
  });
}

Graph triangular(std::size_t m) {
  const auto pairs = two_subsets(m);
  return from_predicate(pairs.size(), [&](std::size_t i, std::size_t j) {
    const Edge &x = pairs[i], &y = pairs[j];
    return x.incident_to(y.u) || x.incident_to(y.v);
  });
}

Graph folded5cube() {
  return from_predicate(16, [](std::size_t i, std::size_t j) {
    const int weight = std::popcount(static_cast<unsigned>(i ^ j));
    return weight == 1 || weight == 4;
  });
}

Graph wheel(std::size_t n) {
  if (n < 3) throw InputError("wheel needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n);
  }
  return Graph(n + 1, edges);
}

Graph fan(std::size_t n) {
  if (n < 1) throw InputError("fan needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(0, 2 * i + 1);
    edges.emplace_back(0, 2 * i + 2);
    edges.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return Graph(2 * n + 1, edges);
}

std::vector<std::string> generator_names() {
  return {"cycle",      "complete",   "complete_bipartite", "petersen", "paley", "octahedron",
          "rook",       "triangular", "folded5cube",        "wheel",    "fan",   "empty",
          "path"};
}

Graph generate(std::string_view name, std::span<const std::int64_t> params) {
  if (name == "cycle") {
    expect_arity(name, params, 1);
    return cycle(arg(name, params, 0, 3));
  }
  if (name == "complete") {
    expect_arity(name, params, 1);
    return complete(arg(name, params, 0, 0));
  }
  if (name == "complete_bipartite") {
    expect_arity(name, params, 2);
    return complete_bipartite(arg(name, params, 0, 0), arg(name, params, 1, 0));
  }
  if (name == "petersen") {
    expect_arity(name, params, 0);
    return petersen();
  }
  if (name == "paley") {
    expect_arity(name, params, 1);
    return paley(arg(name, params, 0, 2));
  }
  if (name == "octahedron") {
    expect_arity(name, params, 0);
    return octahedron();
  }
  if (name == "rook") {
    expect_arity(name, params, 1);
    return rook(arg(name, params, 0, 1));
  }
  if (name == "triangular") {
    expect_arity(name, params, 1);
    return triangular(arg(name, params, 0, 2));
  }
  if (name == "folded5cube") {
    expect_arity(name, params, 0);
    return folded5cube();
  }
  if (name == "wheel") {
    expect_arity(name, params, 1);
    return wheel(arg(name, params, 0, 3));
  }
  if (name == "fan") {
    expect_arity(name, params, 1);
    return fan(arg(name, params, 0, 1));
  }
  if (name == "empty") {
    expect_arity(name, params, 1);
    return empty_graph(arg(name, params, 0, 0));
  }
  if (name == "path") {
    expect_arity(name, params, 1);
    return path(arg(name, params, 0, 0));
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

std::string CorpusEntry::label() const {
  std::string out = name;
  for (auto p : params) out += " " + std::to_string(p);
  return out;
}

std::vector<CorpusEntry> srg_corpus() {
  struct Row {
    const char* name;
    std::vector<std::int64_t> params;
    SrgParameters expected;
  };
  const std::vector<Row> rows = {
      {"petersen", {}, {10, 3, 0, 1}},
      {"complete_bipartite", {3, 3}, {6, 3, 0, 3}},
      {"paley", {5}, {5, 2, 0, 1}},
      {"paley", {13}, {13, 6, 2, 3}},
      {"paley", {17}, {17, 8, 3, 4}},
      {"octahedron", {}, {6, 4, 2, 4}},
      {"triangular", {5}, {10, 6, 3, 4}},
      {"rook", {3}, {9, 4, 1, 2}},
      {"folded5cube", {}, {16, 5, 0, 2}},
  };
  std::vector<CorpusEntry> corpus;
  for (const auto& row : rows) {
    corpus.push_back({row.name, row.params, generate(row.name, row.params), row.expected});
  }
  return corpus;
}

}  // namespace gallai
