#include "kplex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kplex {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::vector<std::int64_t> labels)
    : n_(n), adj_(static_cast<std::size_t>(n), Bitset(n)), degrees_(static_cast<std::size_t>(n), 0) {
  if (labels.empty()) {
    labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels_[v] = v + 1;
  } else {
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    adj_[u].set(v);
    adj_[v].set(u);
  }
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    degrees_[v] = adj_[v].count();
    total += degrees_[v];
  }
  m_ = total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, int line) {
  std::int64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("malformed integer '" + std::string(tok) + "'", line);
  return value;
}

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line, ++line_no);
    pos = nl + 1;
  }
}

Graph parse_dimacs_text(std::string_view text) {
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for_each_line(text, [&](std::string_view line, int line_no) {
    line = trim_left(line);
    if (line.empty() || line[0] == 'c') return;
    const auto toks = split_ws(line);
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError("duplicate 'p' line", line_no);
      if (toks.size() < 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError("expected 'p edge <n> <m>'", line_no);
      const auto nv = parse_int(toks[2], line_no);
      parse_int(toks[3], line_no);
      if (nv < 0 || nv > std::numeric_limits<int>::max()) throw ParseError("vertex count out of range", line_no);
      n = static_cast<int>(nv);
      return;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError("edge line before 'p' line", line_no);
      if (toks.size() < 3) throw ParseError("expected 'e <u> <v>'", line_no);
      const auto u = parse_int(toks[1], line_no);
      const auto v = parse_int(toks[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range", line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      return;
    }
    throw ParseError("unexpected line '" + std::string(toks[0]) + "'", line_no);
  });
  if (n < 0) throw ParseError("missing 'p edge' line", 0);
  return Graph(n, edges);
}

Graph parse_edgelist_text(std::string_view text) {
  std::unordered_map<std::int64_t, Vertex> ids;
  std::vector<std::int64_t> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  bool saw_edge = false;
  auto intern = [&](std::int64_t raw) {
    auto [it, fresh] = ids.try_emplace(raw, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(raw);
    return it->second;
  };
  for_each_line(text, [&](std::string_view line, int line_no) {
    line = trim_left(line);
    if (line.empty() || line[0] == '%' || line[0] == '#') return;
    const auto toks = split_ws(line);
    if (toks.size() < 2) throw ParseError("expected two vertex ids", line_no);
    const auto a = parse_int(toks[0], line_no);
    const auto b = parse_int(toks[1], line_no);
    if (a < 0 || b < 0) throw ParseError("negative vertex id", line_no);
    saw_edge = true;
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    if (u != v) edges.emplace_back(u, v);
  });
  if (!saw_edge) throw ParseError("no edges", 0);
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

bool looks_like_dimacs(std::string_view text) {
  bool dimacs = false;
  bool decided = false;
  for_each_line(text, [&](std::string_view line, int) {
    if (decided) return;
    line = trim_left(line);
    if (line.empty() || line[0] == 'c' || line[0] == '%' || line[0] == '#') return;
    dimacs = line.size() >= 2 && line[0] == 'p' && std::isspace(static_cast<unsigned char>(line[1]));
    decided = true;
  });
  return dimacs;
}

}  // namespace

Graph parse_dimacs(std::istream& in) { return parse_dimacs_text(slurp(in)); }
Graph parse_edgelist(std::istream& in) { return parse_edgelist_text(slurp(in)); }

Graph parse_graph_text(std::string_view text, InputFormat format) {
  if (format == InputFormat::kAuto) format = looks_like_dimacs(text) ? InputFormat::kDimacs : InputFormat::kEdgeList;
  return format == InputFormat::kDimacs ? parse_dimacs_text(text) : parse_edgelist_text(text);
}

Graph parse_graph(std::istream& in, InputFormat format) { return parse_graph_text(slurp(in), format); }

Graph load_graph(const std::string& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_graph(in, format);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  DegeneracyOrder result;
  result.ordering.reserve(static_cast<std::size_t>(g.n()));
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  Bitset removed(g.n());
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    result.degeneracy = std::max(result.degeneracy, d);
    result.ordering.push_back(v);
    removed.set(v);
    g.neighbors(v).for_each([&](Vertex w) {
      if (removed.test(w)) return;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    });
  }
  return result;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
  InducedSubgraph out;
  out.to_parent = keep.to_vector();
  const int n = static_cast<int>(out.to_parent.size());
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    to_child[out.to_parent[i]] = i;
    labels[i] = g.label(out.to_parent[i]);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    const Bitset kept = g.neighbors(out.to_parent[i]) & keep;
    kept.for_each([&](Vertex w) {
      if (to_child[w] > i) edges.emplace_back(i, to_child[w]);
    });
  }
  out.graph = Graph(n, edges, std::move(labels));
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace kplex
