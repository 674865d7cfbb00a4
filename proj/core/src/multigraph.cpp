#include "plg/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "plg/errors.hpp"

namespace plg {

MultiGraph::MultiGraph(int node_count) {
  if (node_count < 0) throw Error(Errc::invalid_edge, "negative node count");
  n_ = node_count;
  degrees_.assign(static_cast<size_t>(node_count) + 1, 0);
}

MultiGraph MultiGraph::build(int node_count,
                             const std::vector<std::tuple<int, int, long long>>& edges) {
  MultiGraph g(node_count);
  for (const auto& [u, v, m] : edges) g.add_edge(u, v, m);
  return g;
}

void MultiGraph::add_edge(int u, int v, long long multiplicity) {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw Error(Errc::invalid_edge, "edge endpoint out of range");
  if (multiplicity < 1) throw Error(Errc::invalid_edge, "multiplicity must be at least 1");
  if (u > v) std::swap(u, v);
  edges_[{u, v}] += multiplicity;
  degrees_[static_cast<size_t>(u)] += multiplicity;
  degrees_[static_cast<size_t>(v)] += multiplicity;
  total_ += multiplicity;
}

int MultiGraph::add_nodes(int count) {
  const int first = n_ + 1;
  n_ += count;
  degrees_.resize(static_cast<size_t>(n_) + 1, 0);
  return first;
}

long long MultiGraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? 0 : it->second;
}

std::vector<std::vector<int>> MultiGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_) + 1);
  for (const auto& [e, m] : edges_) {
    if (e.first == e.second) continue;
    adj[static_cast<size_t>(e.first)].push_back(e.second);
    adj[static_cast<size_t>(e.second)].push_back(e.first);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> MultiGraph::self_loop_nodes() const {
  std::vector<int> out;
  for (const auto& [e, m] : edges_)
    if (e.first == e.second) out.push_back(e.first);
  return out;
}

bool MultiGraph::is_simple() const {
  for (const auto& [e, m] : edges_)
    if (e.first == e.second || m > 1) return false;
  return true;
}

long long MultiGraph::max_degree() const {
  long long best = 0;
  for (int v = 1; v <= n_; ++v) best = std::max(best, degrees_[static_cast<size_t>(v)]);
  return best;
}

DegreeHistogram degree_histogram(const MultiGraph& g) {
  DegreeHistogram h;
  for (int v = 1; v <= g.node_count(); ++v) ++h[g.degree(v)];
  return h;
}

bool is_connected(const MultiGraph& g) {
  const int n = g.node_count();
  if (n <= 1) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<size_t>(v)]) {
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      ++reached;
      q.push(w);
    }
  }
  return reached == n;
}

SimpleProjection underlying_simple(const MultiGraph& g) {
  SimpleProjection out{MultiGraph(g.node_count()), {}};
  for (const auto& [e, m] : g.edges()) {
    if (e.first == e.second)
      out.forced.push_back(e.first);
    else
      out.graph.add_edge(e.first, e.second, 1);
  }
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& nodes) {
  std::vector<int> label(static_cast<size_t>(g.node_count()) + 1, 0);
  for (size_t i = 0; i < nodes.size(); ++i) label[static_cast<size_t>(nodes[i])] = static_cast<int>(i) + 1;
  MultiGraph sub(static_cast<int>(nodes.size()));
  for (const auto& [e, m] : g.edges()) {
    const int a = label[static_cast<size_t>(e.first)], b = label[static_cast<size_t>(e.second)];
    if (a && b) sub.add_edge(a, b, m);
  }
  return sub;
}

std::string emit_plgm(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "p plgm " << g.node_count() << ' ' << g.distinct_edges() << '\n';
  for (const std::string& c : comments) {
    if (c.find('\n') != std::string::npos) throw Error(Errc::parse_error, "comment holds a newline");
    out << (c.empty() ? "c" : "c " + c) << '\n';
  }
  for (const auto& [e, m] : g.edges()) out << "e " << e.first << ' ' << e.second << ' ' << m << '\n';
  return out.str();
}

namespace {

long long parse_int(const std::string& tok, int line) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || (tok.size() > 1 && tok[0] == '0') || tok[0] == '+')
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": bad integer '" + tok + "'");
  return v;
}

std::vector<std::string> split_spaces(const std::string& s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i <= s.size()) {
    const size_t j = s.find(' ', i);
    out.push_back(s.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

}  // namespace

PlgmDocument parse_plgm(const std::string& text) {
  PlgmDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  long long declared = 0, seen_edges = 0;
  std::pair<int, int> last{0, 0};
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": empty line");
    if (!header) {
      const auto t = split_spaces(line);
      if (t.size() != 4 || t[0] != "p" || t[1] != "plgm")
        throw Error(Errc::parse_error, "line 1 must be 'p plgm <nodes> <edges>'");
      const long long n = parse_int(t[2], lineno);
      declared = parse_int(t[3], lineno);
      if (n < 0 || n > 2000000000 || declared < 0)
        throw Error(Errc::parse_error, "bad header counts");
      doc.graph = MultiGraph(static_cast<int>(n));
      header = true;
      continue;
    }
    if (line == "c") {
      doc.comments.emplace_back();
    } else if (line.rfind("c ", 0) == 0) {
      if (seen_edges > 0) throw Error(Errc::parse_error, "comment after edge lines");
      doc.comments.push_back(line.substr(2));
    } else {
      const auto t = split_spaces(line);
      if (t.size() != 4 || t[0] != "e")
        throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'e u v m'");
      const long long u = parse_int(t[1], lineno), v = parse_int(t[2], lineno),
                      m = parse_int(t[3], lineno);
      if (u > v) throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": need u <= v");
      if (u < 1 || v > doc.graph.node_count() || m < 1)
        throw Error(Errc::invalid_edge, "line " + std::to_string(lineno) + ": edge out of range");
      const std::pair<int, int> key{static_cast<int>(u), static_cast<int>(v)};
      if (seen_edges > 0 && !(last < key))
        throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": edges not strictly sorted");
      last = key;
      doc.graph.add_edge(key.first, key.second, m);
      ++seen_edges;
    }
  }
  if (!header) throw Error(Errc::parse_error, "missing header line");
  if (seen_edges != declared) throw Error(Errc::parse_error, "edge count does not match header");
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::parse_error, "write failed for " + path);
}

void write_plgm_file(const std::string& path, const MultiGraph& g,
                     const std::vector<std::string>& comments) {
  write_text_file(path, emit_plgm(g, comments));
}

PlgmDocument read_plgm_file(const std::string& path) { return parse_plgm(read_text_file(path)); }

}  // namespace plg
