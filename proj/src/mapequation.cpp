#include "pubnet/mapequation.hpp"

#include <cmath>
#include <stdexcept>

namespace pubnet {

double plogp(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

FlowGraph flow_graph(const Network& net, const MapEquationOptions& options) {
  if (net.nodes.empty()) throw std::invalid_argument("map equation: empty graph");
  const double total_weight = net.total_weight();
  if (!(total_weight > 0)) throw std::invalid_argument("map equation: zero-weight graph");

  IndexedGraph g = IndexedGraph::from(net);
  const int n = g.size();
  FlowGraph flow;
  flow.ids = g.ids;
  flow.node_flow.assign(n, 0.0);
  flow.out_flow.resize(n);
  flow.in_flow.resize(n);

  if (!net.directed) {
    for (int u = 0; u < n; ++u) {
      double strength = 0.0;
      for (const auto& [v, w] : g.out[u]) strength += w;
      flow.node_flow[u] = strength / (2.0 * total_weight);
      for (const auto& [v, w] : g.out[u]) flow.out_flow[u].push_back({v, w / (2.0 * total_weight)});
    }
  } else {
    std::vector<double> out_weight(n, 0.0);
    for (int u = 0; u < n; ++u)
      for (const auto& [v, w] : g.out[u]) out_weight[u] += w;

    const double tau = options.teleportation;
    std::vector<double> pi(n, 1.0 / n), next(n, 0.0);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      double dangling = 0.0;
      for (int u = 0; u < n; ++u)
        if (out_weight[u] <= 0.0) dangling += pi[u];
      const double base = tau / n + (1.0 - tau) * dangling / n;
      std::fill(next.begin(), next.end(), base);
      for (int u = 0; u < n; ++u) {
        if (out_weight[u] <= 0.0) continue;
        const double share = (1.0 - tau) * pi[u] / out_weight[u];
        for (const auto& [v, w] : g.out[u]) next[v] += share * w;
      }
      double delta = 0.0;
      for (int u = 0; u < n; ++u) delta += std::abs(next[u] - pi[u]);
      pi.swap(next);
      if (delta < options.tolerance) break;
    }
    flow.node_flow = pi;
    for (int u = 0; u < n; ++u) {
      if (out_weight[u] <= 0.0) continue;
      const double share = (1.0 - tau) * pi[u] / out_weight[u];
      for (const auto& [v, w] : g.out[u]) flow.out_flow[u].push_back({v, share * w});
    }
  }

  for (int u = 0; u < n; ++u)
    for (const auto& [v, f] : flow.out_flow[u]) flow.in_flow[v].push_back({u, f});
  for (int u = 0; u < n; ++u) flow.node_flow_plogp += plogp(flow.node_flow[u]);
  return flow;
}

std::map<std::string, double> visit_rates(const Network& net, const MapEquationOptions& options) {
  FlowGraph flow = flow_graph(net, options);
  std::map<std::string, double> rates;
  for (int u = 0; u < flow.size(); ++u) rates[flow.ids[u]] = flow.node_flow[u];
  return rates;
}

CodelengthReport codelength(const FlowGraph& graph, const std::vector<int>& module_of) {
  int module_count = 0;
  for (int m : module_of) module_count = std::max(module_count, m + 1);
  std::vector<double> exit_flow(module_count, 0.0), module_flow(module_count, 0.0);
  for (int u = 0; u < graph.size(); ++u) {
    module_flow[module_of[u]] += graph.node_flow[u];
    for (const auto& [v, f] : graph.out_flow[u])
      if (module_of[u] != module_of[v]) exit_flow[module_of[u]] += f;
  }
  double total_exit = 0.0, sum_plogp_exit = 0.0, sum_plogp_exit_plus = 0.0;
  for (int m = 0; m < module_count; ++m) {
    total_exit += exit_flow[m];
    sum_plogp_exit += plogp(exit_flow[m]);
    sum_plogp_exit_plus += plogp(exit_flow[m] + module_flow[m]);
  }
  CodelengthReport report;
  report.index_term_bits = plogp(total_exit) - sum_plogp_exit;
  report.module_term_bits = sum_plogp_exit_plus - sum_plogp_exit - graph.node_flow_plogp;
  report.codelength_bits = report.index_term_bits + report.module_term_bits;
  return report;
}

CodelengthReport map_equation(const Network& net, const Partition& part,
                              const MapEquationOptions& options) {
  if (!covers(part, net)) throw std::invalid_argument("map equation: partition does not cover the graph");
  FlowGraph flow = flow_graph(net, options);
  std::vector<int> module_of(flow.size());
  std::map<int, int> dense;
  for (int u = 0; u < flow.size(); ++u) {
    int cluster = part.assignment.at(flow.ids[u]);
    auto [it, inserted] = dense.try_emplace(cluster, static_cast<int>(dense.size()));
    module_of[u] = it->second;
  }
  return codelength(flow, module_of);
}

}  // namespace pubnet
