#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"

namespace pubnet {

enum class NodeRole {
  ultra_peripheral,
  peripheral,
  connector,
  satellite_connector,
  provincial_hub,
  connector_hub,
  satellite_connector_hub,
};

const char* role_name(NodeRole role);
bool is_hub(NodeRole role);

struct RoleThresholds {
  double hub_z = 2.5;
  double nonhub_ultra = 0.05;       // p <= : ultra-peripheral
  double nonhub_peripheral = 0.62;  // p <= : peripheral
  double nonhub_connector = 0.80;   // p <= : connector, above: satellite connector
  double hub_provincial = 0.30;     // p <= : provincial hub
  double hub_connector = 0.75;      // p <= : connector hub, above: satellite connector hub
};

// Within-module degree z-score over unweighted degrees; modules where every
// member has equal internal degree get z = 0.
std::map<std::string, double> within_module_z(const Network& net, const Partition& part);

// p_i = 1 - sum_s (k_is / k_i)^2 over modules s; isolated nodes get p = 0.
std::map<std::string, double> participation_coefficient(const Network& net, const Partition& part);

NodeRole classify_role(double z, double p, const RoleThresholds& thresholds = {});

struct NodeRoleProfile {
  double z = 0.0;
  double p = 0.0;
  NodeRole role = NodeRole::ultra_peripheral;
};

std::map<std::string, NodeRoleProfile> role_profiles(const Network& net, const Partition& part,
                                                     const RoleThresholds& thresholds = {});

struct RolePairKs {
  NodeRole a;
  NodeRole b;
  double distance = 0.0;
  double critical = 0.0;
};

struct DistortionReport {
  // Cumulative distribution of name commonality per populated role:
  // (value, P(X <= value)).
  std::map<NodeRole, std::vector<std::pair<double, double>>> per_role_cdf;
  std::map<NodeRole, int> role_counts;
  std::vector<RolePairKs> pairs;    // roles with >= min_population members
  std::optional<double> max_ks;
  std::vector<RolePairKs> flagged;  // distance above the critical value
  bool sufficient = false;          // at least two roles met min_population
  double alpha = 0.05;
  int min_population = 30;
};

// Two-sample Kolmogorov-Smirnov distances of the per-role commonality
// distributions; commonality values are looked up per node. Throws when a
// profiled node has no commonality entry.
DistortionReport distortion_report(const std::map<std::string, NodeRoleProfile>& profiles,
                                   const std::map<std::string, double>& node_commonality,
                                   int min_population = 30, double alpha = 0.05);

// Critical value of the two-sample KS statistic at significance alpha for
// sample sizes n and m.
double ks_critical_value(std::size_t n, std::size_t m, double alpha);

}  // namespace pubnet
