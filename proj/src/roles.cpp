#include "pubnet/roles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pubnet {

const char* role_name(NodeRole role) {
  switch (role) {
    case NodeRole::ultra_peripheral: return "ultra_peripheral";
    case NodeRole::peripheral: return "peripheral";
    case NodeRole::connector: return "connector";
    case NodeRole::satellite_connector: return "satellite_connector";
    case NodeRole::provincial_hub: return "provincial_hub";
    case NodeRole::connector_hub: return "connector_hub";
    case NodeRole::satellite_connector_hub: return "satellite_connector_hub";
  }
  return "unknown";
}

bool is_hub(NodeRole role) {
  return role == NodeRole::provincial_hub || role == NodeRole::connector_hub ||
         role == NodeRole::satellite_connector_hub;
}

namespace {

void require_cover(const Partition& part, const Network& net, const char* what) {
  if (!covers(part, net)) throw std::invalid_argument(std::string(what) + ": partition does not cover the graph");
}

}  // namespace

std::map<std::string, double> within_module_z(const Network& net, const Partition& part) {
  require_cover(part, net, "within_module_z");
  IndexedGraph g = IndexedGraph::from(net);
  const int n = g.size();
  std::vector<int> module_of(n);
  for (int u = 0; u < n; ++u) module_of[u] = part.assignment.at(g.ids[u]);

  std::vector<double> internal_degree(n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (const auto& [v, w] : g.out[u])
      if (module_of[v] == module_of[u]) internal_degree[u] += 1.0;
    if (g.directed)
      for (const auto& [v, w] : g.in[u])
        if (module_of[v] == module_of[u]) internal_degree[u] += 1.0;
  }

  std::map<int, std::pair<double, double>> sums;  // module -> (sum, sum of squares)
  std::map<int, int> sizes;
  for (int u = 0; u < n; ++u) {
    sums[module_of[u]].first += internal_degree[u];
    sums[module_of[u]].second += internal_degree[u] * internal_degree[u];
    ++sizes[module_of[u]];
  }

  std::map<std::string, double> z;
  for (int u = 0; u < n; ++u) {
    const auto& [sum, sumsq] = sums[module_of[u]];
    const double count = sizes[module_of[u]];
    const double mean = sum / count;
    const double variance = std::max(0.0, sumsq / count - mean * mean);
    const double stddev = std::sqrt(variance);
    z[g.ids[u]] = stddev > 0.0 ? (internal_degree[u] - mean) / stddev : 0.0;
  }
  return z;
}

std::map<std::string, double> participation_coefficient(const Network& net, const Partition& part) {
  require_cover(part, net, "participation_coefficient");
  IndexedGraph g = IndexedGraph::from(net);
  const int n = g.size();
  std::vector<int> module_of(n);
  for (int u = 0; u < n; ++u) module_of[u] = part.assignment.at(g.ids[u]);

  std::map<std::string, double> p;
  std::map<int, double> per_module;
  for (int u = 0; u < n; ++u) {
    per_module.clear();
    double degree = 0.0;
    for (const auto& [v, w] : g.out[u]) {
      per_module[module_of[v]] += 1.0;
      degree += 1.0;
    }
    if (g.directed) {
      for (const auto& [v, w] : g.in[u]) {
        per_module[module_of[v]] += 1.0;
        degree += 1.0;
      }
    }
    if (degree <= 0.0) {
      p[g.ids[u]] = 0.0;
      continue;
    }
    double sum_sq = 0.0;
    for (const auto& [m, k] : per_module) sum_sq += (k / degree) * (k / degree);
    p[g.ids[u]] = 1.0 - sum_sq;
  }
  return p;
}

NodeRole classify_role(double z, double p, const RoleThresholds& t) {
  if (z >= t.hub_z) {
    if (p <= t.hub_provincial) return NodeRole::provincial_hub;
    if (p <= t.hub_connector) return NodeRole::connector_hub;
    return NodeRole::satellite_connector_hub;
  }
  if (p <= t.nonhub_ultra) return NodeRole::ultra_peripheral;
  if (p <= t.nonhub_peripheral) return NodeRole::peripheral;
  if (p <= t.nonhub_connector) return NodeRole::connector;
  return NodeRole::satellite_connector;
}

std::map<std::string, NodeRoleProfile> role_profiles(const Network& net, const Partition& part,
                                                     const RoleThresholds& thresholds) {
  auto z = within_module_z(net, part);
  auto p = participation_coefficient(net, part);
  std::map<std::string, NodeRoleProfile> profiles;
  for (const auto& [node, zv] : z) {
    NodeRoleProfile profile;
    profile.z = zv;
    profile.p = p.at(node);
    profile.role = classify_role(profile.z, profile.p, thresholds);
    profiles[node] = profile;
  }
  return profiles;
}

double ks_critical_value(std::size_t n, std::size_t m, double alpha) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

namespace {

// Max vertical distance between the empirical CDFs of two sorted samples.
double ks_distance(const std::vector<double>& a, const std::vector<double>& b) {
  std::size_t i = 0, j = 0;
  double distance = 0.0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    double fa = static_cast<double>(i) / a.size();
    double fb = static_cast<double>(j) / b.size();
    distance = std::max(distance, std::abs(fa - fb));
  }
  return distance;
}

}  // namespace

DistortionReport distortion_report(const std::map<std::string, NodeRoleProfile>& profiles,
                                   const std::map<std::string, double>& node_commonality,
                                   int min_population, double alpha) {
  DistortionReport report;
  report.alpha = alpha;
  report.min_population = min_population;

  std::map<NodeRole, std::vector<double>> samples;
  for (const auto& [node, profile] : profiles) {
    auto it = node_commonality.find(node);
    if (it == node_commonality.end())
      throw std::invalid_argument("distortion_report: no commonality value for node " + node);
    samples[profile.role].push_back(it->second);
  }
  for (auto& [role, values] : samples) {
    std::sort(values.begin(), values.end());
    report.role_counts[role] = static_cast<int>(values.size());
    std::vector<std::pair<double, double>> cdf;
    for (std::size_t i = 0; i < values.size(); ++i) {
      double v = values[i];
      while (i + 1 < values.size() && values[i + 1] == v) ++i;
      cdf.push_back({v, static_cast<double>(i + 1) / values.size()});
    }
    report.per_role_cdf[role] = std::move(cdf);
  }

  std::vector<NodeRole> eligible;
  for (const auto& [role, values] : samples)
    if (static_cast<int>(values.size()) >= min_population) eligible.push_back(role);
  report.sufficient = eligible.size() >= 2;
  if (!report.sufficient) return report;

  for (std::size_t i = 0; i < eligible.size(); ++i)
    for (std::size_t j = i + 1; j < eligible.size(); ++j) {
      const auto& a = samples[eligible[i]];
      const auto& b = samples[eligible[j]];
      RolePairKs pair;
      pair.a = eligible[i];
      pair.b = eligible[j];
      pair.distance = ks_distance(a, b);
      pair.critical = ks_critical_value(a.size(), b.size(), alpha);
      report.pairs.push_back(pair);
      if (!report.max_ks || pair.distance > *report.max_ks) report.max_ks = pair.distance;
      if (pair.distance > pair.critical) report.flagged.push_back(pair);
    }
  return report;
}

}  // namespace pubnet
