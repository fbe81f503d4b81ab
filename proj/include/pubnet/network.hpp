#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pubnet {

// Weighted graph over opaque node ids. Undirected edges are stored once under
// the ordered key (min, max). Immutable by convention once built; all
// algorithms take it by const reference.
struct Network {
  bool directed = false;
  std::vector<std::string> nodes;  // sorted ascending, unique
  std::map<std::pair<std::string, std::string>, double> edges;
  std::map<std::string, std::map<std::string, double>> node_num_attrs;
  std::map<std::string, std::map<std::string, std::string>> node_str_attrs;
  std::string note;  // free-form caveat carried into exports

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool has_node(const std::string& id) const;
  double total_weight() const;
};

class NetworkBuilder {
 public:
  explicit NetworkBuilder(bool directed) { net_.directed = directed; }

  void add_node(const std::string& id);
  // Accumulates weight onto an existing edge. Throws on self-loops and
  // non-positive weights.
  void add_edge(const std::string& u, const std::string& v, double weight = 1.0);
  void set_num_attr(const std::string& node, const std::string& key, double value);
  void set_str_attr(const std::string& node, const std::string& key, const std::string& value);
  Network build();

 private:
  Network net_;
  std::map<std::string, bool> node_set_;
};

// Dense-index view used by the graph algorithms. Node index = position of the
// id in the sorted id list.
struct IndexedGraph {
  bool directed = false;
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  // Directed: out/in adjacency. Undirected: both lists mirror each other.
  std::vector<std::vector<std::pair<int, double>>> out;
  std::vector<std::vector<std::pair<int, double>>> in;

  static IndexedGraph from(const Network& net);
  int size() const { return static_cast<int>(ids.size()); }
};

struct ComponentStats {
  std::size_t giant_size = 0;
  double giant_fraction = 0.0;
  std::size_t component_count = 0;
};

// Weak components for directed graphs. Throws on an empty graph.
ComponentStats component_stats(const Network& net);

// Components as sorted node-id lists, largest first (ties by first id).
std::vector<std::vector<std::string>> weak_components(const Network& net);

// Induced subgraph on `keep` (attributes of kept nodes preserved).
Network subnetwork(const Network& net, const std::vector<std::string>& keep);

}  // namespace pubnet
