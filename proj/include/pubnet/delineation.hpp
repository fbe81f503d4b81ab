#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pubnet/affinity.hpp"
#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"

namespace pubnet {

// Directed, unweighted network over one researcher's publications; an edge
// A -> B where A's cited references match B. Throws on an empty list.
Network self_citation_network(const std::vector<BiblioRecord>& researcher_pubs);

struct RecallCluster {
  int cluster_id = 0;
  std::size_t doc_count = 0;
  double overlap = 0.0;  // |cluster ∩ field corpus| / |cluster|
  std::vector<std::string> sample_titles;
};

struct RecallReport {
  std::string researcher_id;
  std::vector<RecallCluster> clusters;  // overlap ascending
};

RecallReport recall_report(const std::string& researcher_id,
                           const std::vector<BiblioRecord>& researcher_pubs,
                           const Corpus& field_corpus, std::uint64_t seed, int trials,
                           std::size_t max_sample_titles = 5);

struct PrecisionReport {
  std::vector<int> top_areas;            // the k largest area ids
  AssociationMatrix matrix;              // author-activity mode, restricted
  std::vector<std::set<int>> components; // weak components of the affinity network
  bool disjoint_flag = false;            // more than one component
};

// Author-activity residuals restricted to the top_k largest areas; the
// disjoint flag signals a checkerboard-style split. Throws when fewer than
// two areas are available.
PrecisionReport precision_report(const Corpus& field_corpus, const TopicAreas& areas,
                                 int top_k = 4);

}  // namespace pubnet
