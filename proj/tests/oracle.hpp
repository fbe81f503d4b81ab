#pragma once

// Test-only oracles, independent of the library's optimization code paths.

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pubnet/mapequation.hpp"
#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"

namespace oracle {

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> result;
  std::vector<int> labels(n, 0);
  std::function<void(int, int)> recurse = [&](int i, int max_label) {
    if (i == n) {
      result.push_back(labels);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      labels[i] = label;
      recurse(i + 1, std::max(max_label, label));
    }
  };
  if (n > 0) recurse(0, -1);
  return result;
}

struct BruteForceResult {
  double min_bits = 0.0;
  pubnet::Partition best;
};

// Exhaustive minimum of the map equation over every set partition.
inline BruteForceResult brute_force_min_codelength(const pubnet::Network& net,
                                                   const pubnet::MapEquationOptions& options = {}) {
  BruteForceResult result;
  bool first = true;
  for (const auto& labels : all_partitions(static_cast<int>(net.nodes.size()))) {
    pubnet::Partition part;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) part.assignment[net.nodes[i]] = labels[i];
    double bits = pubnet::map_equation(net, part, options).codelength_bits;
    if (first || bits < result.min_bits) {
      result.min_bits = bits;
      result.best = part;
      first = false;
    }
  }
  return result;
}

// Union-find component sizes, as an independent check of component_stats.
inline std::vector<std::size_t> union_find_components(const pubnet::Network& net) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    if (parent[x] == x) return x;
    return parent[x] = find(parent[x]);
  };
  for (const auto& id : net.nodes) parent[id] = id;
  for (const auto& [key, w] : net.edges) {
    std::string a = find(key.first), b = find(key.second);
    if (a != b) parent[a] = b;
  }
  std::map<std::string, std::size_t> sizes;
  for (const auto& id : net.nodes) ++sizes[find(id)];
  std::vector<std::size_t> out;
  for (const auto& [root, size] : sizes) out.push_back(size);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Upper-tail chi-square probability by Simpson quadrature of the density.
// Substituting x = u^2 removes the integrable singularity at 0 for df = 1:
// the lower-tail integrand becomes 2 u^(df-1) exp(-u^2/2) / norm, smooth for
// every df >= 1.
inline double chi_square_upper_tail(double statistic, int df) {
  if (statistic <= 0.0) return 1.0;
  const double k2 = df / 2.0;
  const double norm = std::pow(2.0, k2) * std::tgamma(k2);
  auto integrand = [&](double u) {
    return 2.0 * std::pow(u, static_cast<double>(df) - 1.0) * std::exp(-u * u / 2.0) / norm;
  };
  const double upper = std::sqrt(statistic);
  const int steps = 200000;
  const double h = upper / steps;
  double sum = integrand(0.0) + integrand(upper);
  for (int i = 1; i < steps; ++i) sum += integrand(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  double lower = sum * h / 3.0;
  return std::min(1.0, std::max(0.0, 1.0 - lower));
}

}  // namespace oracle
