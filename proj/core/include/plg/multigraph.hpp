#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace plg {

// Undirected multigraph on nodes 1..n. A self-loop adds 2 to its node's degree
// per unit of multiplicity.
class MultiGraph {
 public:
  using EdgeMap = std::map<std::pair<int, int>, long long>;

  MultiGraph() = default;
  explicit MultiGraph(int node_count);

  static MultiGraph build(int node_count,
                          const std::vector<std::tuple<int, int, long long>>& edges);

  void add_edge(int u, int v, long long multiplicity = 1);
  // Appends isolated nodes and returns the id of the first one.
  int add_nodes(int count);

  int node_count() const { return n_; }
  long long degree(int v) const { return degrees_.at(static_cast<size_t>(v)); }
  const std::vector<long long>& degrees() const { return degrees_; }
  const EdgeMap& edges() const { return edges_; }
  long long multiplicity(int u, int v) const;
  long long total_multiplicity() const { return total_; }
  size_t distinct_edges() const { return edges_.size(); }
  // Simple neighbour lists without self-loops, sorted ascending.
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> self_loop_nodes() const;
  bool is_simple() const;
  long long max_degree() const;

  bool operator==(const MultiGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  EdgeMap edges_;
  std::vector<long long> degrees_{0};
  long long total_ = 0;
};

using DegreeHistogram = std::map<long long, long long>;

DegreeHistogram degree_histogram(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

struct SimpleProjection {
  MultiGraph graph;
  std::vector<int> forced;  // nodes that carried a self-loop
};

SimpleProjection underlying_simple(const MultiGraph& g);

// Subgraph induced by `nodes` (ids relabelled 1..k in the given order).
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& nodes);

struct PlgmDocument {
  MultiGraph graph;
  std::vector<std::string> comments;
};

std::string emit_plgm(const MultiGraph& g, const std::vector<std::string>& comments = {});
PlgmDocument parse_plgm(const std::string& text);
void write_plgm_file(const std::string& path, const MultiGraph& g,
                     const std::vector<std::string>& comments = {});
PlgmDocument read_plgm_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace plg
