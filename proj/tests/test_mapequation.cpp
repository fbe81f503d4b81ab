#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "pubnet/mapequation.hpp"

using namespace pubnet;

namespace {

Network two_triangles() {
  return testutil::undirected(
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "y"}, {"y", "z"}, {"x", "z"}});
}

Partition one_module(const Network& net) {
  Partition part;
  for (const auto& id : net.nodes) part.assignment[id] = 0;
  return part;
}

}  // namespace

TEST_CASE("single-module codelength is the visit-rate entropy") {
  auto net = testutil::undirected({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"a", "c"}});
  auto report = map_equation(net, one_module(net));
  auto rates = visit_rates(net);
  double entropy = 0.0;
  for (const auto& [node, p] : rates) entropy -= p * std::log2(p);
  CHECK(report.index_term_bits == doctest::Approx(0.0));
  CHECK(report.codelength_bits == doctest::Approx(entropy));
  CHECK(report.codelength_bits ==
        doctest::Approx(report.index_term_bits + report.module_term_bits));
}

TEST_CASE("4-node cycle: uniform visit rates, module term 2 bits") {
  auto net = testutil::undirected({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto rates = visit_rates(net);
  for (const auto& [node, p] : rates) CHECK(p == doctest::Approx(0.25));
  auto report = map_equation(net, one_module(net));
  CHECK(report.module_term_bits == doctest::Approx(2.0));
  CHECK(report.index_term_bits == doctest::Approx(0.0));
}

TEST_CASE("two disjoint triangles: planted split beats one module and is the brute-force minimum") {
  auto net = two_triangles();
  auto split = testutil::partition({{"a", 0}, {"b", 0}, {"c", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
  double split_bits = map_equation(net, split).codelength_bits;
  double merged_bits = map_equation(net, one_module(net)).codelength_bits;
  CHECK(split_bits < merged_bits);
  CHECK(split_bits == doctest::Approx(std::log2(3.0)));

  auto brute = oracle::brute_force_min_codelength(net);
  CHECK(split_bits == doctest::Approx(brute.min_bits));
}

TEST_CASE("visit rates sum to one and directed rates are a teleport fixed point") {
  auto net = testutil::directed({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "c"}, {"d", "a"}});
  MapEquationOptions options;
  auto rates = visit_rates(net, options);
  double sum = 0.0;
  for (const auto& [node, p] : rates) sum += p;
  CHECK(std::abs(sum - 1.0) < 1e-12);

  // One application of the teleporting walk maps the rates onto themselves.
  IndexedGraph g = IndexedGraph::from(net);
  std::vector<double> pi(g.size());
  for (int u = 0; u < g.size(); ++u) pi[u] = rates.at(g.ids[u]);
  std::vector<double> out_weight(g.size(), 0.0);
  for (int u = 0; u < g.size(); ++u)
    for (const auto& [v, w] : g.out[u]) out_weight[u] += w;
  double dangling = 0.0;
  for (int u = 0; u < g.size(); ++u)
    if (out_weight[u] <= 0.0) dangling += pi[u];
  const double tau = options.teleportation;
  std::vector<double> next(g.size(), tau / g.size() + (1 - tau) * dangling / g.size());
  for (int u = 0; u < g.size(); ++u) {
    if (out_weight[u] <= 0.0) continue;
    for (const auto& [v, w] : g.out[u]) next[v] += (1 - tau) * pi[u] * w / out_weight[u];
  }
  for (int u = 0; u < g.size(); ++u) CHECK(std::abs(next[u] - pi[u]) < 1e-9);
}

TEST_CASE("directed two-cycle pair: brute force agrees with evaluator ordering") {
  // Two 2-cycles joined by one arc; the two cycles are the optimum.
  auto net = testutil::directed({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"b", "c"}});
  auto brute = oracle::brute_force_min_codelength(net);
  auto split = testutil::partition({{"a", 0}, {"b", 0}, {"c", 1}, {"d", 1}});
  CHECK(map_equation(net, split).codelength_bits == doctest::Approx(brute.min_bits));
}

TEST_CASE("errors: partition must cover, graph must carry weight") {
  auto net = two_triangles();
  Partition partial;
  partial.assignment["a"] = 0;
  CHECK_THROWS_AS(map_equation(net, partial), std::invalid_argument);

  Network empty;
  CHECK_THROWS_AS(map_equation(empty, Partition{}), std::invalid_argument);

  Network isolated;
  isolated.nodes = {"a", "b"};
  CHECK_THROWS_AS(map_equation(isolated, one_module(isolated)), std::invalid_argument);
}

TEST_CASE("index and module terms always sum to the total") {
  auto net = testutil::undirected({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}});
  for (const auto& labels : oracle::all_partitions(5)) {
    Partition part;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) part.assignment[net.nodes[i]] = labels[i];
    auto report = map_equation(net, part);
    CHECK(report.codelength_bits ==
          doctest::Approx(report.index_term_bits + report.module_term_bits));
    CHECK(report.codelength_bits >= -1e-12);
  }
}
