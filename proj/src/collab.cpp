#include "pubnet/collab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>

#include "pubnet/text.hpp"

namespace pubnet {

bool default_collab_rule(const ClusterPairStats& stats) {
  if (stats.hub_hub) return true;
  return stats.distinct_pairs >= 2 && stats.joint_pubs >= 2;
}

InterClusterLink classify_intercluster_link(const ClusterPairStats& stats,
                                            const CollabRule& rule) {
  InterClusterLink link;
  link.stats = stats;
  link.collaboration = rule(stats);
  return link;
}

std::map<std::pair<int, int>, ClusterPairStats> cluster_pair_stats(
    const Network& coauthor, const Partition& part,
    const std::map<std::string, NodeRoleProfile>& profiles, const Corpus& corpus,
    const AuthorTable& table) {
  std::map<std::pair<int, int>, ClusterPairStats> stats;
  auto pair_key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };

  // Distinct cross-cluster co-author pairs come straight from the graph.
  for (const auto& [key, w] : coauthor.edges) {
    auto ca = part.assignment.find(key.first);
    auto cb = part.assignment.find(key.second);
    if (ca == part.assignment.end() || cb == part.assignment.end()) continue;
    if (ca->second == cb->second) continue;
    auto& entry = stats[pair_key(ca->second, cb->second)];
    entry.cluster_a = std::min(ca->second, cb->second);
    entry.cluster_b = std::max(ca->second, cb->second);
    ++entry.distinct_pairs;
  }

  auto is_hub_node = [&](const std::string& identity) {
    auto it = profiles.find(identity);
    return it != profiles.end() && is_hub(it->second.role);
  };

  // Joint publications and hub-hub links need a pass over the records.
  for (const auto& rec : corpus.records()) {
    std::map<int, bool> clusters_present;   // cluster -> has hub author on this record
    for (const auto& author : rec.authors) {
      std::string identity = author.identity();
      if (!table.entries.count(identity)) continue;
      auto it = part.assignment.find(identity);
      if (it == part.assignment.end()) continue;
      bool& has_hub = clusters_present[it->second];
      has_hub = has_hub || is_hub_node(identity);
    }
    if (clusters_present.size() < 2) continue;
    for (auto a = clusters_present.begin(); a != clusters_present.end(); ++a) {
      auto b = a;
      for (++b; b != clusters_present.end(); ++b) {
        auto& entry = stats[pair_key(a->first, b->first)];
        entry.cluster_a = std::min(a->first, b->first);
        entry.cluster_b = std::max(a->first, b->first);
        ++entry.joint_pubs;
        if (a->second && b->second) entry.hub_hub = true;
      }
    }
  }
  return stats;
}

GroupCollabNetwork build_group_collab_network(const Network& coauthor, const Partition& part,
                                              const std::map<std::string, NodeRoleProfile>& profiles,
                                              const Corpus& corpus, const AuthorTable& table,
                                              const CollabRule& rule) {
  GroupCollabNetwork result;
  NetworkBuilder builder(false);
  std::map<int, int> cluster_sizes;
  for (const auto& [node, cluster] : part.assignment) ++cluster_sizes[cluster];
  for (const auto& [cluster, size] : cluster_sizes) {
    std::string id = std::to_string(cluster);
    builder.add_node(id);
    builder.set_num_attr(id, "size", static_cast<double>(size));
  }

  std::set<int> linked;
  for (const auto& [key, stats] : cluster_pair_stats(coauthor, part, profiles, corpus, table)) {
    if (stats.distinct_pairs == 0) continue;  // no co-author edge between the clusters
    if (!rule(stats)) continue;
    builder.add_edge(std::to_string(stats.cluster_a), std::to_string(stats.cluster_b),
                     static_cast<double>(stats.distinct_pairs));
    linked.insert(stats.cluster_a);
    linked.insert(stats.cluster_b);
  }
  result.network = builder.build();
  result.total_clusters = cluster_sizes.size();
  result.linked_clusters = linked.size();
  result.linked_fraction = result.total_clusters == 0
                               ? 0.0
                               : static_cast<double>(result.linked_clusters) /
                                     static_cast<double>(result.total_clusters);
  return result;
}

ContinentMap ContinentMap::load(std::istream& in) {
  ContinentMap map;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto cols = split(t, ',');
    if (cols.size() >= 2) map.add(trim(cols[0]), trim(cols[1]));
  }
  return map;
}

void ContinentMap::add(const std::string& code, const std::string& continent) {
  code_to_continent_[upper_ascii_fold(code)] = continent;
}

std::string ContinentMap::continent(const std::string& code) const {
  auto it = code_to_continent_.find(upper_ascii_fold(code));
  return it == code_to_continent_.end() ? "Other" : it->second;
}

std::map<std::string, long long> cluster_country_counts(const std::set<std::string>& members,
                                                        const AuthorTable& table,
                                                        const Corpus& corpus) {
  std::set<std::string> pubs;
  for (const auto& member : members) {
    auto it = table.entries.find(member);
    if (it == table.entries.end()) continue;
    pubs.insert(it->second.record_ids.begin(), it->second.record_ids.end());
  }
  std::map<std::string, long long> counts;
  for (const auto& id : pubs) {
    if (const BiblioRecord* rec = corpus.find(id))
      for (const auto& code : rec->addresses) ++counts[code];
  }
  return counts;
}

std::string geographic_affiliation(const std::map<std::string, long long>& country_counts,
                                   const ContinentMap& continents) {
  if (country_counts.empty()) return "Other";
  // Rank countries by count, ties alphabetically.
  std::vector<std::pair<std::string, long long>> ranked(country_counts.begin(),
                                                        country_counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  const std::string top_continent = continents.continent(ranked[0].first);
  if (ranked.size() >= 2 && 2 * ranked[1].second >= ranked[0].second) {
    const std::string second_continent = continents.continent(ranked[1].first);
    if (second_continent != top_continent) {
      std::string lo = std::min(top_continent, second_continent);
      std::string hi = std::max(top_continent, second_continent);
      return lo + "/" + hi;
    }
  }
  return top_continent;
}

TopicalActivity topical_activity(const std::set<std::string>& members,
                                 const std::map<std::string, NodeRoleProfile>& profiles,
                                 const TopicAreas& areas, const AuthorTable& table) {
  TopicalActivity result;
  std::set<std::string> hub_members;
  for (const auto& member : members) {
    auto it = profiles.find(member);
    if (it != profiles.end() && is_hub(it->second.role)) hub_members.insert(member);
  }
  result.used_all_members = hub_members.empty();
  const std::set<std::string>& pool = hub_members.empty() ? members : hub_members;

  std::set<std::string> pubs;
  for (const auto& member : pool) {
    auto it = table.entries.find(member);
    if (it == table.entries.end()) continue;
    pubs.insert(it->second.record_ids.begin(), it->second.record_ids.end());
  }
  result.pub_count = pubs.size();
  for (const auto& area : areas.areas) result.activity[area.area_id] = 0.0;
  if (pubs.empty()) {
    result.empty_pub_set = true;
    return result;
  }
  for (const auto& area : areas.areas) {
    std::size_t in_area = 0;
    for (const auto& id : pubs)
      if (area.doc_ids.count(id)) ++in_area;
    result.activity[area.area_id] =
        static_cast<double>(in_area) / static_cast<double>(pubs.size());
  }
  return result;
}

std::string activity_grayscale_hex(double activity) {
  double v = std::clamp(activity, 0.0, 1.0);
  int level;
  if (v >= 0.9)
    level = 0;  // black above 90%
  else
    level = static_cast<int>(std::lround(255.0 * (1.0 - v / 0.9)));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
  return std::string(buf);
}

std::string continent_color_hex(const std::string& label) {
  if (label == "Asia") return "#ffffb3";                // light yellow
  if (label == "Europe") return "#4575b4";              // blue
  if (label == "North America") return "#d73027";       // red
  if (label == "Asia/Europe") return "#b2df8a";         // light green
  if (label == "Europe/North America") return "#7b3294";  // violet
  if (label == "Asia/North America") return "#fdae61";  // orange
  return "#ffffff";                                     // Other
}

PropensityTable geographic_propensity(const Network& collab,
                                      const std::map<std::string, std::string>& affiliation) {
  PropensityTable table;
  table.note =
      "Deviation of observed partner shares from a null model proportional to "
      "group counts; the source group is excluded from its own target pool.";
  if (collab.nodes.empty()) return table;

  std::set<std::string> labels;
  for (const auto& node : collab.nodes) {
    auto it = affiliation.find(node);
    if (it == affiliation.end())
      throw std::invalid_argument("geographic_propensity: node " + node + " has no affiliation");
    labels.insert(it->second);
    ++table.group_count[it->second];
  }
  table.affiliations.assign(labels.begin(), labels.end());
  const std::size_t k = table.affiliations.size();
  std::map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < k; ++i) label_index[table.affiliations[i]] = i;

  // Directed view: every edge counts once from each endpoint.
  std::map<std::string, long long> degree;
  std::vector<std::vector<long long>> links(k, std::vector<long long>(k, 0));
  std::vector<long long> out_links(k, 0);
  for (const auto& [key, w] : collab.edges) {
    const std::string& la = affiliation.at(key.first);
    const std::string& lb = affiliation.at(key.second);
    ++degree[key.first];
    ++degree[key.second];
    ++links[label_index[la]][label_index[lb]];
    ++links[label_index[lb]][label_index[la]];
    ++out_links[label_index[la]];
    ++out_links[label_index[lb]];
  }

  const long long total_groups = static_cast<long long>(collab.nodes.size());
  table.cells.assign(k, std::vector<PropensityCell>(k));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      PropensityCell& cell = table.cells[s][t];
      cell.observed_links = links[s][t];
      if (out_links[s] == 0 || total_groups < 2) continue;
      long long pool = table.group_count[table.affiliations[t]] - (s == t ? 1 : 0);
      double expected_share = static_cast<double>(pool) / static_cast<double>(total_groups - 1);
      if (!(expected_share > 0.0)) continue;
      double observed_share =
          static_cast<double>(links[s][t]) / static_cast<double>(out_links[s]);
      cell.available = true;
      cell.deviation_pct = (observed_share - expected_share) / expected_share * 100.0;
    }
  }
  for (const auto& [label, count] : table.group_count) {
    long long sum = 0;
    for (const auto& node : collab.nodes)
      if (affiliation.at(node) == label) sum += degree.count(node) ? degree[node] : 0;
    table.avg_degree[label] = static_cast<double>(sum) / static_cast<double>(count);
  }
  return table;
}

}  // namespace pubnet
