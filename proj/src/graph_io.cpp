#include "fewbranch/graph_io.hpp"

#include <charconv>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace fewbranch {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// Calls fn(line_number, tokens) for each non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Vertex parse_vertex(int line_no, std::string_view token) {
  auto value = to_integer(token);
  if (!value) throw ParseError(line_no, "expected a vertex id, got '" + std::string(token) + "'");
  if (*value < 0 || *value > 1'000'000'000) throw ParseError(line_no, "vertex id out of range: " + std::string(token));
  return static_cast<Vertex>(*value);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> declared_n;
  bool seen_edge = false;
  Vertex max_id = -1;
  std::vector<Edge> edges;
  for_each_record(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.front() == "p") {
      if (declared_n) throw ParseError(line_no, "duplicate header");
      if (seen_edge) throw ParseError(line_no, "header must precede edges");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      auto n = to_integer(tokens[1]);
      auto m = to_integer(tokens[2]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000'000)
        throw ParseError(line_no, "header must be 'p <n> <m>' with nonnegative integers");
      declared_n = static_cast<int>(*n);
      return;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected an edge line '<u> <v>'");
    const Vertex u = parse_vertex(line_no, tokens[0]);
    const Vertex v = parse_vertex(line_no, tokens[1]);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (declared_n && (u >= *declared_n || v >= *declared_n))
      throw ParseError(line_no, "vertex id >= n = " + std::to_string(*declared_n));
    seen_edge = true;
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  });
  const int n = declared_n ? *declared_n : max_id + 1;
  return Graph(n, edges);
}

Graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_parent_array(const SpanningTree& t) {
  std::ostringstream out;
  out << "t " << t.order() << '\n';
  for (Vertex v = 0; v < t.order(); ++v) out << v << ' ' << t.parent(v) << '\n';
  return out.str();
}

SpanningTree parse_tree(const Graph& host, std::string_view text) {
  std::optional<int> declared_n;
  std::vector<Vertex> parent;
  std::vector<char> assigned;
  for_each_record(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.front() == "t") {
      if (declared_n || tokens.size() != 2) throw ParseError(line_no, "header must be a single 't <n>'");
      auto n = to_integer(tokens[1]);
      if (!n || *n != host.order())
        throw ParseError(line_no, "tree order must equal graph order " + std::to_string(host.order()));
      declared_n = static_cast<int>(*n);
      parent.assign(static_cast<std::size_t>(*n), kNoVertex);
      assigned.assign(static_cast<std::size_t>(*n), 0);
      return;
    }
    if (!declared_n) throw ParseError(line_no, "missing 't <n>' header");
    if (tokens.size() != 2) throw ParseError(line_no, "expected '<v> <parent>'");
    const Vertex v = parse_vertex(line_no, tokens[0]);
    auto p = to_integer(tokens[1]);
    if (!p || *p < -1 || *p >= *declared_n) throw ParseError(line_no, "bad parent id");
    if (v >= *declared_n) throw ParseError(line_no, "vertex id >= n");
    if (assigned[static_cast<std::size_t>(v)]) throw ParseError(line_no, "vertex listed twice");
    assigned[static_cast<std::size_t>(v)] = 1;
    parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(*p);
  });
  if (!declared_n) throw ParseError(0, "missing 't <n>' header");
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end())
    throw ParseError(0, "every vertex needs a parent line");
  try {
    return SpanningTree::from_parents(host, parent);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace fewbranch
