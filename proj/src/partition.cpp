#include "pubnet/partition.hpp"

#include <istream>
#include <ostream>
#include <set>

#include "pubnet/text.hpp"

namespace pubnet {

int Partition::cluster_count() const {
  std::set<int> ids;
  for (const auto& [node, cluster] : assignment) ids.insert(cluster);
  return static_cast<int>(ids.size());
}

std::map<int, std::vector<std::string>> Partition::clusters() const {
  std::map<int, std::vector<std::string>> out;
  for (const auto& [node, cluster] : assignment) out[cluster].push_back(node);
  return out;
}

Partition canonicalized(const Partition& part) {
  Partition out;
  out.canonical = true;
  std::map<int, int> relabel;
  for (const auto& [node, cluster] : part.assignment) {  // std::map: ascending node ids
    auto [it, inserted] = relabel.try_emplace(cluster, static_cast<int>(relabel.size()));
    out.assignment[node] = it->second;
  }
  return out;
}

std::vector<int> canonical_encoding(const Partition& part) {
  Partition canon = part.canonical ? part : canonicalized(part);
  std::vector<int> encoding;
  encoding.reserve(canon.assignment.size());
  for (const auto& [node, cluster] : canon.assignment) encoding.push_back(cluster);
  return encoding;
}

bool covers(const Partition& part, const Network& net) {
  for (const auto& id : net.nodes)
    if (!part.assignment.count(id)) return false;
  return true;
}

void write_partition(const Partition& part, std::ostream& out) {
  for (const auto& [node, cluster] : part.assignment) out << node << '\t' << cluster << '\n';
}

Partition read_partition(std::istream& in) {
  Partition part;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 2) continue;
    if (auto cluster = parse_int(cols[1])) part.assignment[cols[0]] = *cluster;
  }
  return part;
}

}  // namespace pubnet
