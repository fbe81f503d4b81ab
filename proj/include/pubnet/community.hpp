#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pubnet/mapequation.hpp"
#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"

namespace pubnet {

struct DetectOptions {
  MapEquationOptions map_eq;
};

struct DetectResult {
  Partition partition;  // canonical
  CodelengthReport codelength;
  // Codelength after each optimizer phase of the winning trial; never
  // increasing.
  std::vector<double> descent_bits;
};

// Greedy map-equation minimization: local node moves to the best neighboring
// module until no move improves, alternated with aggregation passes. Runs
// `trials` seeded restarts and returns the minimum-codelength partition; ties
// broken by the lexicographically smallest canonical encoding. Deterministic
// for fixed (seed, trials).
DetectResult detect_communities(const Network& net, std::uint64_t seed = 1, int trials = 20,
                                const DetectOptions& options = {});

struct AggregateResult {
  Network network;  // nodes = cluster ids as decimal strings
  double dropped_intra_weight = 0.0;
};

AggregateResult aggregate(const Network& net, const Partition& part);

struct DoubleClusterResult {
  Partition level1;                    // over documents
  Partition level2;                    // over level-1 cluster ids
  std::map<std::string, int> docmap;   // document -> topic area (level-2 cluster)
  CodelengthReport level1_codelength;
  CodelengthReport level2_codelength;
};

DoubleClusterResult double_cluster(const Network& net, std::uint64_t seed, int trials,
                                   const DetectOptions& options = {});

struct PlantedParams {
  int n = 0;
  int k = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

struct PlantedGraph {
  Network network;
  Partition truth;
  PlantedParams params;
};

// k equal blocks over n nodes (k must divide n); intra-block pairs are edges
// with probability p_in, inter-block with p_out. Requires 0 <= p_out < p_in <= 1.
PlantedGraph planted_partition(int n, int k, double p_in, double p_out, std::uint64_t seed);

// Normalized mutual information with arithmetic-mean normalization; requires
// identical node sets.
double nmi(const Partition& a, const Partition& b);

}  // namespace pubnet
