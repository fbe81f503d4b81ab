#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pubnet/network.hpp"

namespace pubnet {

struct Partition {
  std::map<std::string, int> assignment;  // node id -> cluster id
  bool canonical = false;

  int cluster_count() const;
  std::map<int, std::vector<std::string>> clusters() const;  // members sorted
};

// Relabels clusters 0..k-1 in order of first appearance over ascending node
// ids.
Partition canonicalized(const Partition& part);

// Cluster labels in ascending node-id order of the canonical form; used as
// the deterministic tie-break between equal-codelength partitions.
std::vector<int> canonical_encoding(const Partition& part);

bool covers(const Partition& part, const Network& net);

// Delimited text: node_id <tab> cluster_id, sorted by node id.
void write_partition(const Partition& part, std::ostream& out);
Partition read_partition(std::istream& in);

}  // namespace pubnet
