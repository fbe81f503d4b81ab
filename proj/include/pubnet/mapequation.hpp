#pragma once

#include <map>
#include <string>
#include <vector>

#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"

namespace pubnet {

struct MapEquationOptions {
  double teleportation = 0.15;  // directed graphs only
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct CodelengthReport {
  double codelength_bits = 0.0;
  double index_term_bits = 0.0;
  double module_term_bits = 0.0;
};

// Random-walk flows underlying the map equation. Undirected: node flow =
// strength / (2 * total weight), each edge carries w / (2W) in both
// directions. Directed: node flow = stationary distribution of the walk with
// uniform teleportation; arc flow = pi_u * (1 - tau) * w_uv / outweight_u.
// Teleportation steps (and the redistribution of dangling-node mass) are not
// encoded, so they contribute no exit flow.
struct FlowGraph {
  std::vector<std::string> ids;
  std::vector<double> node_flow;
  std::vector<std::vector<std::pair<int, double>>> out_flow;
  std::vector<std::vector<std::pair<int, double>>> in_flow;
  double node_flow_plogp = 0.0;  // sum over nodes of plogp(node_flow), fixed per graph

  int size() const { return static_cast<int>(ids.size()); }
};

// Throws std::invalid_argument when the graph has no edges or zero total
// weight.
FlowGraph flow_graph(const Network& net, const MapEquationOptions& options = {});

std::map<std::string, double> visit_rates(const Network& net,
                                          const MapEquationOptions& options = {});

// Two-level map-equation codelength of the partition described by
// module_of[node index].
CodelengthReport codelength(const FlowGraph& graph, const std::vector<int>& module_of);

// Throws when the partition does not cover every node of the network.
CodelengthReport map_equation(const Network& net, const Partition& part,
                              const MapEquationOptions& options = {});

double plogp(double x);  // x * log2(x), 0 at x <= 0

}  // namespace pubnet
