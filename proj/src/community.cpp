#include "pubnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pubnet/text.hpp"

namespace pubnet {

namespace {

constexpr double kImprovementEps = 1e-12;

// Mutable optimizer state over a FlowGraph. The objective tracked is the full
// two-level codelength; only the partition-dependent terms change on a move.
struct LocalState {
  const FlowGraph& graph;
  std::vector<int> module_of;
  std::vector<double> exit_flow;    // per module: flow leaving on real arcs
  std::vector<double> module_flow;  // per module: sum of node flows
  std::vector<double> out_total;    // per node: total outgoing arc flow
  double total_exit = 0.0;
  double sum_plogp_exit = 0.0;
  double sum_plogp_exit_plus = 0.0;
  std::vector<int> free_modules;

  explicit LocalState(const FlowGraph& g, std::vector<int> assignment)
      : graph(g), module_of(std::move(assignment)) {
    int module_count = 0;
    for (int m : module_of) module_count = std::max(module_count, m + 1);
    exit_flow.assign(module_count, 0.0);
    module_flow.assign(module_count, 0.0);
    out_total.assign(g.size(), 0.0);
    for (int u = 0; u < g.size(); ++u) {
      module_flow[module_of[u]] += g.node_flow[u];
      for (const auto& [v, f] : g.out_flow[u]) {
        out_total[u] += f;
        if (module_of[u] != module_of[v]) exit_flow[module_of[u]] += f;
      }
    }
    for (int m = 0; m < module_count; ++m) accumulate_module(m, +1.0);
  }

  void accumulate_module(int m, double sign) {
    total_exit += sign * exit_flow[m];
    sum_plogp_exit += sign * plogp(exit_flow[m]);
    sum_plogp_exit_plus += sign * plogp(exit_flow[m] + module_flow[m]);
  }

  double objective() const {
    return plogp(total_exit) - 2.0 * sum_plogp_exit + sum_plogp_exit_plus -
           graph.node_flow_plogp;
  }

  // Flow between u and module m over both arc directions.
  struct NeighborFlows {
    std::vector<std::pair<int, double>> per_module;  // module -> flow(u<->module)
  };

  void gather(int u, std::vector<std::pair<int, double>>& per_module) const {
    per_module.clear();
    auto add = [&](int module, double f) {
      for (auto& [m, acc] : per_module)
        if (m == module) {
          acc += f;
          return;
        }
      per_module.push_back({module, f});
    };
    for (const auto& [v, f] : graph.out_flow[u]) add(module_of[v], f);
    for (const auto& [v, f] : graph.in_flow[u]) add(module_of[v], f);
  }

  // Objective change if u moved from its module to `target`.
  double move_delta(int u, int target, double flow_to_current, double flow_to_target) const {
    const int source = module_of[u];
    const double qs = exit_flow[source], ps = module_flow[source];
    const double qt = exit_flow[target], pt = module_flow[target];
    const double pu = graph.node_flow[u], ou = out_total[u];
    const double qs_new = qs - ou + flow_to_current;
    const double qt_new = qt + ou - flow_to_target;
    const double total_exit_new = total_exit + (qs_new - qs) + (qt_new - qt);
    double delta = plogp(total_exit_new) - plogp(total_exit);
    delta -= 2.0 * (plogp(qs_new) - plogp(qs) + plogp(qt_new) - plogp(qt));
    delta += plogp(qs_new + ps - pu) - plogp(qs + ps);
    delta += plogp(qt_new + pt + pu) - plogp(qt + pt);
    return delta;
  }

  void apply_move(int u, int target, double flow_to_current, double flow_to_target) {
    const int source = module_of[u];
    accumulate_module(source, -1.0);
    accumulate_module(target, -1.0);
    exit_flow[source] += -out_total[u] + flow_to_current;
    exit_flow[target] += out_total[u] - flow_to_target;
    module_flow[source] -= graph.node_flow[u];
    module_flow[target] += graph.node_flow[u];
    module_of[u] = target;
    accumulate_module(source, +1.0);
    accumulate_module(target, +1.0);
    if (module_flow[source] <= 0.0 && exit_flow[source] == 0.0) free_modules.push_back(source);
  }

  int fresh_module() {
    while (!free_modules.empty()) {
      int m = free_modules.back();
      if (module_flow[m] <= 0.0) return m;
      free_modules.pop_back();
    }
    exit_flow.push_back(0.0);
    module_flow.push_back(0.0);
    int m = static_cast<int>(exit_flow.size()) - 1;
    free_modules.push_back(m);  // stays free until a move lands in it
    return m;
  }
};

// Sweeps nodes in shuffled order, applying the best improving move, until a
// full sweep moves nothing.
void local_moves(LocalState& state, std::mt19937_64& rng) {
  const int n = state.graph.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<int, double>> per_module;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = n - 1; i > 0; --i) {
      std::swap(order[i], order[static_cast<int>(uniform01(rng) * (i + 1))]);
    }
    for (int u : order) {
      state.gather(u, per_module);
      const int source = state.module_of[u];
      double flow_to_current = 0.0;
      for (const auto& [m, f] : per_module)
        if (m == source) flow_to_current = f;
      int best_target = source;
      double best_delta = 0.0, best_flow = 0.0;
      for (const auto& [m, f] : per_module) {
        if (m == source) continue;
        double delta = state.move_delta(u, m, flow_to_current, f);
        if (delta < best_delta - kImprovementEps) {
          best_delta = delta;
          best_target = m;
          best_flow = f;
        }
      }
      // A singleton escape: moving u into an empty module can pay off when
      // its module holds other nodes.
      if (state.module_flow[source] > state.graph.node_flow[u] + 1e-15) {
        int empty = state.fresh_module();
        double delta = state.move_delta(u, empty, flow_to_current, 0.0);
        if (delta < best_delta - kImprovementEps) {
          best_delta = delta;
          best_target = empty;
          best_flow = 0.0;
        }
      }
      if (best_target != source) {
        state.apply_move(u, best_target, flow_to_current, best_flow);
        moved = true;
      }
    }
  }
}

std::vector<int> compact_labels(const std::vector<int>& module_of) {
  std::map<int, int> dense;
  std::vector<int> out(module_of.size());
  for (std::size_t i = 0; i < module_of.size(); ++i) {
    auto [it, inserted] = dense.try_emplace(module_of[i], static_cast<int>(dense.size()));
    out[i] = it->second;
  }
  return out;
}

// Flow-level aggregation: modules become nodes, inter-module arc flows are
// summed, intra-module flow is dropped (it can never become exit flow at any
// coarser level). The fine-level node term is carried along so codelengths
// stay comparable across levels.
FlowGraph aggregate_flow(const FlowGraph& fine, const std::vector<int>& module_of) {
  int module_count = 0;
  for (int m : module_of) module_count = std::max(module_count, m + 1);
  FlowGraph coarse;
  coarse.ids.resize(module_count);
  for (int m = 0; m < module_count; ++m) coarse.ids[m] = std::to_string(m);
  coarse.node_flow.assign(module_count, 0.0);
  coarse.out_flow.resize(module_count);
  coarse.in_flow.resize(module_count);
  coarse.node_flow_plogp = fine.node_flow_plogp;
  std::map<std::pair<int, int>, double> arcs;
  for (int u = 0; u < fine.size(); ++u) {
    coarse.node_flow[module_of[u]] += fine.node_flow[u];
    for (const auto& [v, f] : fine.out_flow[u])
      if (module_of[u] != module_of[v]) arcs[{module_of[u], module_of[v]}] += f;
  }
  for (const auto& [key, f] : arcs) {
    coarse.out_flow[key.first].push_back({key.second, f});
    coarse.in_flow[key.second].push_back({key.first, f});
  }
  return coarse;
}

struct TrialResult {
  std::vector<int> module_of;
  double bits = 0.0;
  std::vector<double> descent;
};

TrialResult run_trial(const FlowGraph& graph, std::mt19937_64 rng) {
  const int n = graph.size();
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);

  TrialResult result;
  LocalState state(graph, current);
  local_moves(state, rng);
  current = compact_labels(state.module_of);
  double bits = codelength(graph, current).codelength_bits;
  result.descent.push_back(bits);

  for (int round = 0; round < 64; ++round) {
    bool improved = false;

    // Aggregation phase: optimize module-level moves.
    FlowGraph coarse = aggregate_flow(graph, current);
    std::vector<int> coarse_init(coarse.size());
    std::iota(coarse_init.begin(), coarse_init.end(), 0);
    LocalState coarse_state(coarse, coarse_init);
    local_moves(coarse_state, rng);
    std::vector<int> lifted(n);
    for (int u = 0; u < n; ++u) lifted[u] = coarse_state.module_of[current[u]];
    lifted = compact_labels(lifted);
    double lifted_bits = codelength(graph, lifted).codelength_bits;
    if (lifted_bits < bits - kImprovementEps) {
      current = lifted;
      bits = lifted_bits;
      improved = true;
    }
    result.descent.push_back(bits);

    // Refinement phase: single-node moves from the current partition.
    LocalState refine_state(graph, current);
    local_moves(refine_state, rng);
    std::vector<int> refined = compact_labels(refine_state.module_of);
    double refined_bits = codelength(graph, refined).codelength_bits;
    if (refined_bits < bits - kImprovementEps) {
      current = refined;
      bits = refined_bits;
      improved = true;
    }
    result.descent.push_back(bits);

    if (!improved) break;
  }
  result.module_of = std::move(current);
  result.bits = bits;
  return result;
}

}  // namespace

DetectResult detect_communities(const Network& net, std::uint64_t seed, int trials,
                                const DetectOptions& options) {
  if (net.nodes.empty()) throw std::invalid_argument("detect_communities: empty graph");
  if (trials < 1) throw std::invalid_argument("detect_communities: trials must be >= 1");
  FlowGraph graph = flow_graph(net, options.map_eq);

  TrialResult best;
  std::vector<int> best_encoding;
  bool have_best = false;
  for (int trial = 0; trial < trials; ++trial) {
    TrialResult candidate = run_trial(graph, seeded_rng(seed, trial));
    std::vector<int> encoding = compact_labels(candidate.module_of);
    if (!have_best || candidate.bits < best.bits - kImprovementEps ||
        (std::abs(candidate.bits - best.bits) <= kImprovementEps && encoding < best_encoding)) {
      best = std::move(candidate);
      best_encoding = std::move(encoding);
      have_best = true;
    }
  }

  DetectResult result;
  for (int u = 0; u < graph.size(); ++u) result.partition.assignment[graph.ids[u]] = best_encoding[u];
  result.partition = canonicalized(result.partition);
  result.codelength = codelength(graph, best_encoding);
  result.descent_bits = std::move(best.descent);
  return result;
}

AggregateResult aggregate(const Network& net, const Partition& part) {
  if (!covers(part, net)) throw std::invalid_argument("aggregate: partition does not cover the graph");
  AggregateResult result;
  result.network.directed = net.directed;
  std::set<std::string> nodes;
  std::map<std::string, int> sizes;
  for (const auto& id : net.nodes) {
    std::string cluster = std::to_string(part.assignment.at(id));
    nodes.insert(cluster);
    ++sizes[cluster];
  }
  result.network.nodes.assign(nodes.begin(), nodes.end());
  for (const auto& [cluster, size] : sizes)
    result.network.node_num_attrs[cluster]["size"] = static_cast<double>(size);
  for (const auto& [key, w] : net.edges) {
    std::string cu = std::to_string(part.assignment.at(key.first));
    std::string cv = std::to_string(part.assignment.at(key.second));
    if (cu == cv) {
      result.dropped_intra_weight += w;
      continue;
    }
    auto edge_key = (net.directed || cu < cv) ? std::make_pair(cu, cv) : std::make_pair(cv, cu);
    result.network.edges[edge_key] += w;
  }
  return result;
}

DoubleClusterResult double_cluster(const Network& net, std::uint64_t seed, int trials,
                                   const DetectOptions& options) {
  DoubleClusterResult result;
  DetectResult level1 = detect_communities(net, seed, trials, options);
  result.level1 = level1.partition;
  result.level1_codelength = level1.codelength;

  AggregateResult agg = aggregate(net, result.level1);
  if (agg.network.edges.empty()) {
    // No inter-cluster citations: every level-1 cluster is its own topic area.
    for (const auto& id : agg.network.nodes) result.level2.assignment[id] = 0;
    int next = 0;
    for (auto& [id, cluster] : result.level2.assignment) cluster = next++;
    result.level2.canonical = true;
  } else {
    DetectResult level2 = detect_communities(agg.network, seed, trials, options);
    result.level2 = level2.partition;
    result.level2_codelength = level2.codelength;
  }

  for (const auto& [doc, cluster] : result.level1.assignment)
    result.docmap[doc] = result.level2.assignment.at(std::to_string(cluster));
  return result;
}

PlantedGraph planted_partition(int n, int k, double p_in, double p_out, std::uint64_t seed) {
  if (k < 1 || n < k) throw std::invalid_argument("planted_partition: need 1 <= k <= n");
  if (n % k != 0) throw std::invalid_argument("planted_partition: k must divide n");
  if (!(p_out >= 0.0 && p_out < p_in && p_in <= 1.0))
    throw std::invalid_argument("planted_partition: need 0 <= p_out < p_in <= 1");

  int width = 1;
  for (int v = n - 1; v >= 10; v /= 10) ++width;
  auto node_name = [&](int i) {
    std::string digits = std::to_string(i);
    return "n" + std::string(width - digits.size(), '0') + digits;
  };

  PlantedGraph out;
  out.params = {n, k, p_in, p_out, seed};
  const int block = n / k;
  NetworkBuilder builder(false);
  std::mt19937_64 rng = seeded_rng(seed, 0);
  for (int i = 0; i < n; ++i) {
    builder.add_node(node_name(i));
    out.truth.assignment[node_name(i)] = i / block;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = (i / block == j / block) ? p_in : p_out;
      if (uniform01(rng) < p) builder.add_edge(node_name(i), node_name(j), 1.0);
    }
  out.network = builder.build();
  out.truth = canonicalized(out.truth);
  return out;
}

double nmi(const Partition& a, const Partition& b) {
  if (a.assignment.size() != b.assignment.size())
    throw std::invalid_argument("nmi: partitions cover different node sets");
  for (const auto& [node, cluster] : a.assignment)
    if (!b.assignment.count(node)) throw std::invalid_argument("nmi: partitions cover different node sets");

  const double n = static_cast<double>(a.assignment.size());
  if (n == 0) throw std::invalid_argument("nmi: empty partitions");
  std::map<int, double> count_a, count_b;
  std::map<std::pair<int, int>, double> joint;
  for (const auto& [node, ca] : a.assignment) {
    int cb = b.assignment.at(node);
    count_a[ca] += 1.0;
    count_b[cb] += 1.0;
    joint[{ca, cb}] += 1.0;
  }
  auto entropy = [n](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [cluster, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  double ha = entropy(count_a), hb = entropy(count_b);
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    double pxy = c / n;
    double px = count_a[key.first] / n;
    double py = count_b[key.second] / n;
    mi += pxy * std::log(pxy / (px * py));
  }
  if (ha + hb <= 0.0) return 1.0;  // both single-cluster partitions: identical
  double value = 2.0 * mi / (ha + hb);
  return std::min(1.0, std::max(0.0, value));
}

}  // namespace pubnet
