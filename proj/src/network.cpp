#include "pubnet/network.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pubnet {

bool Network::has_node(const std::string& id) const {
  return std::binary_search(nodes.begin(), nodes.end(), id);
}

double Network::total_weight() const {
  double w = 0.0;
  for (const auto& [key, weight] : edges) w += weight;
  return w;
}

void NetworkBuilder::add_node(const std::string& id) { node_set_[id] = true; }

void NetworkBuilder::add_edge(const std::string& u, const std::string& v, double weight) {
  if (u == v) throw std::invalid_argument("network: self-loop on node " + u);
  if (!(weight > 0)) throw std::invalid_argument("network: edge weight must be positive");
  node_set_[u] = true;
  node_set_[v] = true;
  auto key = (net_.directed || u < v) ? std::make_pair(u, v) : std::make_pair(v, u);
  net_.edges[key] += weight;
}

void NetworkBuilder::set_num_attr(const std::string& node, const std::string& key, double value) {
  node_set_[node] = true;
  net_.node_num_attrs[node][key] = value;
}

void NetworkBuilder::set_str_attr(const std::string& node, const std::string& key,
                                  const std::string& value) {
  node_set_[node] = true;
  net_.node_str_attrs[node][key] = value;
}

Network NetworkBuilder::build() {
  net_.nodes.clear();
  net_.nodes.reserve(node_set_.size());
  for (const auto& [id, _] : node_set_) net_.nodes.push_back(id);
  return std::move(net_);
}

IndexedGraph IndexedGraph::from(const Network& net) {
  IndexedGraph g;
  g.directed = net.directed;
  g.ids = net.nodes;
  for (int i = 0; i < static_cast<int>(g.ids.size()); ++i) g.index[g.ids[i]] = i;
  g.out.resize(g.ids.size());
  g.in.resize(g.ids.size());
  for (const auto& [key, w] : net.edges) {
    int u = g.index.at(key.first);
    int v = g.index.at(key.second);
    g.out[u].push_back({v, w});
    g.in[v].push_back({u, w});
    if (!net.directed) {
      g.out[v].push_back({u, w});
      g.in[u].push_back({v, w});
    }
  }
  return g;
}

std::vector<std::vector<std::string>> weak_components(const Network& net) {
  IndexedGraph g = IndexedGraph::from(net);
  std::vector<int> comp(g.size(), -1);
  int count = 0;
  for (int start = 0; start < g.size(); ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : g.out[u])
        if (comp[v] == -1) {
          comp[v] = count;
          stack.push_back(v);
        }
      for (const auto& [v, w] : g.in[u])
        if (comp[v] == -1) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::vector<std::vector<std::string>> components(count);
  for (int i = 0; i < g.size(); ++i) components[comp[i]].push_back(g.ids[i]);
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return components;
}

ComponentStats component_stats(const Network& net) {
  if (net.nodes.empty()) throw std::invalid_argument("component_stats: empty graph");
  auto components = weak_components(net);
  ComponentStats stats;
  stats.component_count = components.size();
  stats.giant_size = components.front().size();
  stats.giant_fraction = static_cast<double>(stats.giant_size) / static_cast<double>(net.node_count());
  return stats;
}

Network subnetwork(const Network& net, const std::vector<std::string>& keep) {
  std::set<std::string> kept(keep.begin(), keep.end());
  Network sub;
  sub.directed = net.directed;
  sub.note = net.note;
  for (const auto& id : net.nodes)
    if (kept.count(id)) sub.nodes.push_back(id);
  for (const auto& [key, w] : net.edges)
    if (kept.count(key.first) && kept.count(key.second)) sub.edges[key] = w;
  for (const auto& [id, attrs] : net.node_num_attrs)
    if (kept.count(id)) sub.node_num_attrs[id] = attrs;
  for (const auto& [id, attrs] : net.node_str_attrs)
    if (kept.count(id)) sub.node_str_attrs[id] = attrs;
  return sub;
}

}  // namespace pubnet
