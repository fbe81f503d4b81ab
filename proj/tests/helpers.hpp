#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"

namespace testutil {

inline pubnet::BiblioRecord record(std::string id, int year,
                                   std::vector<std::pair<std::string, std::string>> authors,
                                   std::vector<std::string> refs = {}) {
  pubnet::BiblioRecord rec;
  rec.record_id = std::move(id);
  rec.year = year;
  for (auto& [last, initials] : authors) {
    pubnet::AuthorName name;
    name.last_name = last;
    name.initials = initials;
    rec.authors.push_back(std::move(name));
  }
  for (auto& raw : refs) {
    pubnet::CitedRef ref;
    ref.raw = std::move(raw);
    rec.cited_refs.push_back(std::move(ref));
  }
  return rec;
}

inline pubnet::Network undirected(const std::vector<std::pair<std::string, std::string>>& edges,
                                  const std::vector<std::string>& extra_nodes = {}) {
  pubnet::NetworkBuilder builder(false);
  for (const auto& [u, v] : edges) builder.add_edge(u, v, 1.0);
  for (const auto& id : extra_nodes) builder.add_node(id);
  return builder.build();
}

inline pubnet::Network directed(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::vector<std::string>& extra_nodes = {}) {
  pubnet::NetworkBuilder builder(true);
  for (const auto& [u, v] : edges) builder.add_edge(u, v, 1.0);
  for (const auto& id : extra_nodes) builder.add_node(id);
  return builder.build();
}

inline pubnet::Partition partition(const std::vector<std::pair<std::string, int>>& assignment) {
  pubnet::Partition part;
  for (const auto& [node, cluster] : assignment) part.assignment[node] = cluster;
  return part;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PUBNET_SOURCE_DIR) + "/tests/fixtures/" + name;
}

inline std::string data_path(const std::string& name) {
  return std::string(PUBNET_SOURCE_DIR) + "/data/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace testutil
