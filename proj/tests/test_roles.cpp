#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pubnet/community.hpp"
#include "pubnet/roles.hpp"
#include "pubnet/text.hpp"

using namespace pubnet;

TEST_CASE("within-module z: clique module has all zeros") {
  auto net = testutil::undirected({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto part = testutil::partition({{"a", 0}, {"b", 0}, {"c", 0}});
  for (const auto& [node, z] : within_module_z(net, part)) CHECK(z == doctest::Approx(0.0));
}

TEST_CASE("within-module z: star of five") {
  auto net = testutil::undirected(
      {{"hub", "l1"}, {"hub", "l2"}, {"hub", "l3"}, {"hub", "l4"}});
  auto part = testutil::partition({{"hub", 0}, {"l1", 0}, {"l2", 0}, {"l3", 0}, {"l4", 0}});
  auto z = within_module_z(net, part);
  CHECK(z.at("hub") == doctest::Approx(2.0));
  CHECK(z.at("l1") == doctest::Approx(-0.5));
}

TEST_CASE("within-module z: node without links in its module sits below the mean") {
  auto net = testutil::undirected({{"a", "b"}, {"c", "d"}, {"c", "e"}, {"d", "e"}, {"a", "c"}});
  // b has no links inside module 1.
  auto part = testutil::partition({{"a", 0}, {"c", 1}, {"d", 1}, {"e", 1}, {"b", 1}});
  auto z = within_module_z(net, part);
  CHECK(z.at("b") < 0.0);
}

TEST_CASE("participation coefficient formulas") {
  SUBCASE("all links internal gives 0") {
    auto net = testutil::undirected({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto part = testutil::partition({{"a", 0}, {"b", 0}, {"c", 0}});
    for (const auto& [node, p] : participation_coefficient(net, part))
      CHECK(p == doctest::Approx(0.0));
  }
  SUBCASE("degree 4 spread over 4 modules gives 0.75") {
    auto net = testutil::undirected({{"x", "a"}, {"x", "b"}, {"x", "c"}, {"x", "d"}});
    auto part = testutil::partition({{"x", 0}, {"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}});
    CHECK(participation_coefficient(net, part).at("x") == doctest::Approx(0.75));
  }
  SUBCASE("degree 2, one internal one external gives 0.5") {
    auto net = testutil::undirected({{"x", "a"}, {"x", "b"}});
    auto part = testutil::partition({{"x", 0}, {"a", 0}, {"b", 1}});
    CHECK(participation_coefficient(net, part).at("x") == doctest::Approx(0.5));
  }
  SUBCASE("isolated node gets 0 by convention") {
    auto net = testutil::undirected({{"a", "b"}}, {"iso"});
    auto part = testutil::partition({{"a", 0}, {"b", 0}, {"iso", 1}});
    CHECK(participation_coefficient(net, part).at("iso") == doctest::Approx(0.0));
  }
}

TEST_CASE("role classification bins") {
  CHECK(classify_role(0.0, 0.0) == NodeRole::ultra_peripheral);
  CHECK(classify_role(3.0, 0.1) == NodeRole::provincial_hub);
  // Boundary: z inclusive at the hub threshold, p=0.8 above the connector-hub bin.
  CHECK(classify_role(2.5, 0.8) == NodeRole::satellite_connector_hub);
  CHECK(classify_role(0.0, 0.05) == NodeRole::ultra_peripheral);
  CHECK(classify_role(0.0, 0.62) == NodeRole::peripheral);
  CHECK(classify_role(0.0, 0.80) == NodeRole::connector);
  CHECK(classify_role(0.0, 0.81) == NodeRole::satellite_connector);
  CHECK(classify_role(2.5, 0.30) == NodeRole::provincial_hub);
  CHECK(classify_role(2.5, 0.75) == NodeRole::connector_hub);
  CHECK(classify_role(2.49, 0.0) == NodeRole::ultra_peripheral);
}

namespace {

struct BruteProfile {
  double z, p;
};

// Direct recomputation from the definitions, structured independently of the
// library implementation.
std::map<std::string, BruteProfile> brute_profiles(const Network& net, const Partition& part) {
  std::map<std::string, BruteProfile> out;
  std::map<std::string, std::vector<std::string>> neighbors;
  for (const auto& [key, w] : net.edges) {
    neighbors[key.first].push_back(key.second);
    neighbors[key.second].push_back(key.first);
  }
  std::map<int, std::vector<double>> kappa_by_module;
  std::map<std::string, double> kappa;
  for (const auto& id : net.nodes) {
    double internal = 0.0;
    for (const auto& other : neighbors[id])
      if (part.assignment.at(other) == part.assignment.at(id)) internal += 1.0;
    kappa[id] = internal;
    kappa_by_module[part.assignment.at(id)].push_back(internal);
  }
  for (const auto& id : net.nodes) {
    const auto& group = kappa_by_module[part.assignment.at(id)];
    double mean = 0.0;
    for (double v : group) mean += v;
    mean /= group.size();
    double var = 0.0;
    for (double v : group) var += (v - mean) * (v - mean);
    var /= group.size();
    double z = var > 0.0 ? (kappa[id] - mean) / std::sqrt(var) : 0.0;

    std::map<int, double> per_module;
    double degree = 0.0;
    for (const auto& other : neighbors[id]) {
      per_module[part.assignment.at(other)] += 1.0;
      degree += 1.0;
    }
    double p = 0.0;
    if (degree > 0) {
      double sum = 0.0;
      for (const auto& [m, k] : per_module) sum += (k / degree) * (k / degree);
      p = 1.0 - sum;
    }
    out[id] = {z, p};
  }
  return out;
}

}  // namespace

TEST_CASE("z and p match brute-force recomputation on random clustered graphs") {
  for (int seed = 0; seed < 30; ++seed) {
    auto planted = planted_partition(36, 3, 0.5, 0.08, seed + 100);
    auto z = within_module_z(planted.network, planted.truth);
    auto p = participation_coefficient(planted.network, planted.truth);
    auto brute = brute_profiles(planted.network, planted.truth);
    for (const auto& id : planted.network.nodes) {
      CHECK(std::abs(z.at(id) - brute.at(id).z) < 1e-12);
      CHECK(std::abs(p.at(id) - brute.at(id).p) < 1e-12);
    }
  }
}

TEST_CASE("role properties: p bound, per-module z moments, weight-scale invariance") {
  auto planted = planted_partition(40, 4, 0.6, 0.1, 2024);
  const auto& net = planted.network;
  const auto& part = planted.truth;
  auto z = within_module_z(net, part);
  auto p = participation_coefficient(net, part);

  std::map<std::string, double> degree;
  for (const auto& [key, w] : net.edges) {
    degree[key.first] += 1.0;
    degree[key.second] += 1.0;
  }
  for (const auto& id : net.nodes) {
    double k = degree.count(id) ? degree[id] : 0.0;
    CHECK(p.at(id) >= 0.0);
    if (k > 0) CHECK(p.at(id) <= 1.0 - 1.0 / k + 1e-12);
  }

  std::map<int, std::vector<double>> z_by_module;
  for (const auto& id : net.nodes) z_by_module[part.assignment.at(id)].push_back(z.at(id));
  for (const auto& [m, values] : z_by_module) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    CHECK(std::abs(mean) < 1e-9);
    double var = 0.0;
    for (double v : values) var += v * v;
    var /= values.size();
    // All-equal modules give variance 0; otherwise population variance 1.
    CHECK((std::abs(var) < 1e-9 || std::abs(var - 1.0) < 1e-9));
  }

  // Uniform weight scaling leaves roles untouched (unweighted degrees).
  Network scaled = net;
  for (auto& [key, w] : scaled.edges) w *= 7.5;
  auto profiles = role_profiles(net, part);
  auto scaled_profiles = role_profiles(scaled, part);
  for (const auto& id : net.nodes) CHECK(profiles.at(id).role == scaled_profiles.at(id).role);
}

TEST_CASE("distortion report: identical commonality everywhere gives zero distances") {
  std::map<std::string, NodeRoleProfile> profiles;
  std::map<std::string, double> commonality;
  for (int i = 0; i < 80; ++i) {
    std::string id = "n" + std::to_string(i);
    NodeRoleProfile profile;
    profile.role = i % 2 == 0 ? NodeRole::peripheral : NodeRole::connector;
    profiles[id] = profile;
    commonality[id] = 3.0;
  }
  auto report = distortion_report(profiles, commonality);
  REQUIRE(report.sufficient);
  CHECK(*report.max_ks == doctest::Approx(0.0));
  CHECK(report.flagged.empty());
  for (const auto& [role, cdf] : report.per_role_cdf) {
    REQUIRE(!cdf.empty());
    CHECK(cdf.back().second == doctest::Approx(1.0));
    for (std::size_t i = 1; i < cdf.size(); ++i) CHECK(cdf[i].second >= cdf[i - 1].second);
  }
}

TEST_CASE("distortion report: fewer than two populated roles is insufficient") {
  std::map<std::string, NodeRoleProfile> profiles;
  std::map<std::string, double> commonality;
  for (int i = 0; i < 40; ++i) {
    std::string id = "n" + std::to_string(i);
    profiles[id] = NodeRoleProfile{};  // all ultra-peripheral
    commonality[id] = 1.0 + i % 5;
  }
  auto report = distortion_report(profiles, commonality);
  CHECK_FALSE(report.sufficient);
  CHECK_FALSE(report.max_ks.has_value());
}

TEST_CASE("distortion report: missing commonality entry is an error") {
  std::map<std::string, NodeRoleProfile> profiles;
  profiles["a"] = NodeRoleProfile{};
  CHECK_THROWS_AS(distortion_report(profiles, {}), std::invalid_argument);
}

TEST_CASE("ks critical value matches the published constant") {
  // c(0.05) = 1.3581, equal samples of 100: D_crit = c * sqrt(2/100).
  CHECK(ks_critical_value(100, 100, 0.05) == doctest::Approx(1.3581 * std::sqrt(0.02)).epsilon(1e-3));
}

namespace {

// Shared generator for the null / distorted Monte-Carlo checks: a modular
// graph whose node names follow a long-tailed commonality distribution.
struct NameModel {
  std::vector<std::string> names;     // name per node
  std::map<std::string, double> commonality_by_name;
};

NameModel assign_names(int n, std::mt19937_64& rng) {
  NameModel model;
  const int distinct = 40;
  std::vector<double> weights(distinct);
  double total = 0.0;
  for (int i = 0; i < distinct; ++i) {
    weights[i] = 1.0 / (i + 1.0);
    total += weights[i];
  }
  std::map<std::string, int> counts;
  for (int i = 0; i < n; ++i) {
    double draw = uniform01(rng) * total;
    int pick = 0;
    while (pick + 1 < distinct && draw > weights[pick]) {
      draw -= weights[pick];
      ++pick;
    }
    std::string name = "NAME" + std::to_string(pick);
    model.names.push_back(name);
    ++counts[name];
  }
  for (const auto& [name, count] : counts) model.commonality_by_name[name] = count;
  return model;
}

}  // namespace

TEST_CASE("distortion detector: null stays quiet, homonym merging trips it") {
  int null_quiet = 0, distorted_loud = 0;
  const int trials = 30;  // acceptance runs the full 100-seed version
  for (int seed = 0; seed < trials; ++seed) {
    auto rng = seeded_rng(4711, seed);
    auto planted = planted_partition(400, 20, 0.55, 0.004, seed + 900);
    auto model = assign_names(400, rng);
    std::map<std::string, double> commonality;
    for (std::size_t i = 0; i < planted.network.nodes.size(); ++i)
      commonality[planted.network.nodes[i]] = model.commonality_by_name.at(model.names[i]);

    auto profiles = role_profiles(planted.network, planted.truth);
    auto report = distortion_report(profiles, commonality);
    if (report.sufficient && report.flagged.empty()) ++null_quiet;

    // Merge same-name triples spanning three modules: the surviving node
    // keeps a third of its links in each module, which lands it in the
    // connector bins (a two-way merge cannot exceed p = 0.5).
    Network merged = planted.network;
    Partition merged_part = planted.truth;
    std::map<std::string, std::string> alias;
    std::map<std::string, std::vector<std::string>> by_name;
    for (std::size_t i = 0; i < planted.network.nodes.size(); ++i)
      by_name[model.names[i]].push_back(planted.network.nodes[i]);
    int merges = 0;
    for (const auto& [name, nodes] : by_name) {
      std::map<int, std::vector<std::string>> by_module;
      for (const auto& id : nodes) by_module[planted.truth.assignment.at(id)].push_back(id);
      while (merges < 50) {
        std::vector<std::string> triple;
        for (auto& [module, members] : by_module) {
          if (members.empty() || triple.size() == 3) continue;
          triple.push_back(members.back());
          members.pop_back();
        }
        if (triple.size() < 3) break;
        alias[triple[1]] = triple[0];
        alias[triple[2]] = triple[0];
        ++merges;
      }
    }
    NetworkBuilder builder(false);
    for (const auto& id : merged.nodes)
      if (!alias.count(id)) builder.add_node(id);
    for (const auto& [key, w] : merged.edges) {
      std::string u = alias.count(key.first) ? alias.at(key.first) : key.first;
      std::string v = alias.count(key.second) ? alias.at(key.second) : key.second;
      if (u != v) builder.add_edge(u, v, w);
    }
    Network merged_net = builder.build();
    Partition part;
    for (const auto& id : merged_net.nodes) part.assignment[id] = merged_part.assignment.at(id);

    auto merged_profiles = role_profiles(merged_net, part);
    std::map<std::string, double> merged_commonality;
    for (const auto& id : merged_net.nodes) merged_commonality[id] = commonality.at(id);
    auto distorted = distortion_report(merged_profiles, merged_commonality);
    if (distorted.sufficient && !distorted.flagged.empty()) ++distorted_loud;
  }
  CHECK(null_quiet >= trials * 9 / 10);
  CHECK(distorted_loud >= trials * 9 / 10);
}
