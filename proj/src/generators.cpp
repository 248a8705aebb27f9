#include "fewbranch/generators.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fewbranch/structure.hpp"

namespace fewbranch {

namespace {

template <typename T>
T parse_number(std::string_view field, std::string_view what) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

// Connected base graph on b vertices with exactly m edges.
Graph base_graph(int b, int m, Rng& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(b));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<Edge> edges;
  for (int i = 1; i < b; ++i)
    edges.emplace_back(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i))]);
  const Graph tree(b, edges);
  std::vector<Edge> spare;
  for (Vertex u = 0; u < b; ++u)
    for (Vertex v = u + 1; v < b; ++v)
      if (!tree.has_edge(u, v)) spare.emplace_back(u, v);
  const auto extra = static_cast<std::size_t>(m - (b - 1));
  for (std::size_t i = 0; i < extra; ++i) {
    std::swap(spare[i], spare[i + rng.below(spare.size() - i)]);
    edges.push_back(spare[i]);
  }
  return Graph(b, edges);
}

Graph relabel(const Graph& g, Rng& rng) {
  std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
  std::iota(label.begin(), label.end(), 0);
  shuffle(label, rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  return Graph(g.order(), edges);
}

Graph random_line_graph(int n, double p, Rng& rng) {
  int lo = 2;
  while (lo * (lo - 1) / 2 < n) ++lo;
  const int hi = n + 1;
  const int b = hi - static_cast<int>(std::lround(p * (hi - lo)));
  return relabel(line_graph(base_graph(b, n, rng)), rng);
}

std::string format_p(double p) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return std::string(buf, ptr);
}

}  // namespace

std::string GenSpec::to_string() const {
  switch (strategy) {
    case Strategy::LineGraph:
    case Strategy::ClawRepair:
    case Strategy::Random: {
      const char* head = strategy == Strategy::LineGraph    ? "linegraph"
                         : strategy == Strategy::ClawRepair ? "clawrepair"
                                                            : "random";
      return std::string(head) + ':' + std::to_string(n) + ':' + format_p(p) + ':' + std::to_string(seed);
    }
    case Strategy::NamedFamily:
      return name;
  }
  return name;
}

GenSpec parse_gen_spec(std::string_view text) {
  const auto fields = split(text, ':');
  GenSpec spec;
  const std::string_view head = fields.front();
  if (head == "linegraph" || head == "clawrepair" || head == "random") {
    if (fields.size() != 4) throw std::invalid_argument("expected strategy:n:p:seed, got '" + std::string(text) + "'");
    spec.strategy = head == "linegraph" ? Strategy::LineGraph
                    : head == "clawrepair" ? Strategy::ClawRepair
                                           : Strategy::Random;
    spec.n = parse_number<int>(fields[1], "n");
    spec.p = parse_number<double>(fields[2], "p");
    spec.seed = parse_number<std::uint64_t>(fields[3], "seed");
    if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    return spec;
  }
  spec.strategy = Strategy::NamedFamily;
  spec.name = std::string(text);
  named_graph(text);
  return spec;
}

Graph generate(const GenSpec& spec) {
  switch (spec.strategy) {
    case Strategy::LineGraph:
    case Strategy::ClawRepair:
      return random_claw_free_connected(spec.n, spec.p, spec.seed, spec.strategy);
    case Strategy::Random:
      return random_graph(spec.n, spec.p, spec.seed);
    case Strategy::NamedFamily:
      return named_graph(spec.name);
  }
  throw std::invalid_argument("unknown strategy");
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v))
        out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(edges.size()), out);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i))]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph repair_claws(const Graph& g) {
  Graph current = g;
  while (auto claw = find_claw(current)) {
    auto edges = current.edges();
    edges.emplace_back(claw->talons[0], claw->talons[1]);
    current = Graph(current.order(), edges);
  }
  return current;
}

Graph random_claw_free_connected(int n, double p, std::uint64_t seed, Strategy strategy) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  Rng rng(seed);
  Graph g;
  if (strategy == Strategy::LineGraph)
    g = random_line_graph(n, p, rng);
  else if (strategy == Strategy::ClawRepair)
    g = repair_claws(random_connected_graph(n, p, rng));
  else
    throw std::invalid_argument("strategy must be LineGraph or ClawRepair");
  if (!is_connected(g) || find_claw(g)) throw std::logic_error("generator produced a graph outside its contract");
  return g;
}

Graph named_graph(std::string_view name) {
  if (name.starts_with("line:")) return line_graph(named_graph(name.substr(5)));
  if (name == "net") return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  if (name.starts_with("K1,")) {
    const int k = parse_number<int>(name.substr(3), "star size");
    if (k < 0) throw std::invalid_argument("star size must be nonnegative");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph(k + 1, edges);
  }
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
    const int n = parse_number<int>(name.substr(1), "order");
    if (n < 1 || (name[0] == 'C' && n < 3)) throw std::invalid_argument("bad order in '" + std::string(name) + "'");
    std::vector<Edge> edges;
    if (name[0] == 'K') {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      if (name[0] == 'C') edges.emplace_back(n - 1, 0);
    }
    return Graph(n, edges);
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace fewbranch
