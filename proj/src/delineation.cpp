#include "pubnet/delineation.hpp"

#include <algorithm>
#include <stdexcept>

#include "pubnet/community.hpp"

namespace pubnet {

Network self_citation_network(const std::vector<BiblioRecord>& researcher_pubs) {
  if (researcher_pubs.empty())
    throw std::invalid_argument("self_citation_network: empty publication list");
  // Re-run normalization over the list so reference matching is restricted to
  // the researcher's own output.
  Corpus own = normalize_corpus(researcher_pubs).corpus;
  NetworkBuilder builder(true);
  for (const auto& rec : own.records()) builder.add_node(rec.record_id);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rec : own.records())
    for (const auto& ref : rec.cited_refs) {
      if (!ref.matched()) continue;
      auto key = std::make_pair(rec.record_id, ref.matched_record_id);
      if (seen.insert(key).second) builder.add_edge(key.first, key.second, 1.0);
    }
  return builder.build();
}

RecallReport recall_report(const std::string& researcher_id,
                           const std::vector<BiblioRecord>& researcher_pubs,
                           const Corpus& field_corpus, std::uint64_t seed, int trials,
                           std::size_t max_sample_titles) {
  Network net = self_citation_network(researcher_pubs);
  Corpus own = normalize_corpus(researcher_pubs).corpus;

  Partition part;
  if (net.total_weight() > 0) {
    part = detect_communities(net, seed, trials).partition;
  } else {
    // No self-citations at all: every publication is its own cluster.
    int next = 0;
    for (const auto& id : net.nodes) part.assignment[id] = next++;
    part.canonical = true;
  }

  RecallReport report;
  report.researcher_id = researcher_id;
  for (const auto& [cluster, members] : part.clusters()) {
    RecallCluster rc;
    rc.cluster_id = cluster;
    rc.doc_count = members.size();
    std::size_t inside = 0;
    for (const auto& id : members) {
      if (field_corpus.contains(id)) ++inside;
      if (rc.sample_titles.size() < max_sample_titles) {
        if (const BiblioRecord* rec = own.find(id)) rc.sample_titles.push_back(rec->title);
      }
    }
    rc.overlap = static_cast<double>(inside) / static_cast<double>(members.size());
    report.clusters.push_back(std::move(rc));
  }
  std::stable_sort(report.clusters.begin(), report.clusters.end(),
                   [](const RecallCluster& a, const RecallCluster& b) { return a.overlap < b.overlap; });
  return report;
}

PrecisionReport precision_report(const Corpus& field_corpus, const TopicAreas& areas, int top_k) {
  if (static_cast<int>(areas.areas.size()) < 2 || top_k < 2)
    throw std::invalid_argument("precision_report: need at least two topic areas");
  if (static_cast<int>(areas.areas.size()) < top_k)
    throw std::invalid_argument("precision_report: fewer areas than top_k");

  TopicAreas top;
  top.total_docs = areas.total_docs;
  top.min_fraction = areas.min_fraction;
  top.areas.assign(areas.areas.begin(), areas.areas.begin() + top_k);

  PrecisionReport report;
  for (const auto& area : top.areas) report.top_areas.push_back(area.area_id);
  report.matrix = association_matrix(top, field_corpus, AssociationMode::author_activity);

  Network affinity = affinity_network(report.matrix, 0.0);
  for (const auto& component : weak_components(affinity)) {
    std::set<int> ids;
    for (const auto& node : component) ids.insert(std::stoi(node.substr(1)));
    report.components.push_back(std::move(ids));
  }
  report.disjoint_flag = report.components.size() > 1;
  return report;
}

}  // namespace pubnet
