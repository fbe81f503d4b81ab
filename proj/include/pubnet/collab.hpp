#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"
#include "pubnet/partition.hpp"
#include "pubnet/roles.hpp"
#include "pubnet/topics.hpp"

namespace pubnet {

struct ClusterPairStats {
  int cluster_a = 0;
  int cluster_b = 0;
  long long joint_pubs = 0;      // records with authors from both clusters
  long long distinct_pairs = 0;  // distinct cross-cluster co-author pairs
  bool hub_hub = false;          // some record links a hub of each cluster
};

// True = group collaboration, false = transfer.
using CollabRule = std::function<bool(const ClusterPairStats&)>;

// Collaboration iff (distinct pairs >= 2 and joint publications >= 2) or a
// hub-hub joint publication exists.
bool default_collab_rule(const ClusterPairStats& stats);

struct InterClusterLink {
  ClusterPairStats stats;
  bool collaboration = false;
};

InterClusterLink classify_intercluster_link(const ClusterPairStats& stats,
                                            const CollabRule& rule = default_collab_rule);

// Per-pair statistics for every cluster pair joined by at least one
// co-author edge.
std::map<std::pair<int, int>, ClusterPairStats> cluster_pair_stats(
    const Network& coauthor, const Partition& part,
    const std::map<std::string, NodeRoleProfile>& profiles, const Corpus& corpus,
    const AuthorTable& table);

struct GroupCollabNetwork {
  Network network;  // nodes = cluster ids, edges = collaboration links only
  std::size_t linked_clusters = 0;
  std::size_t total_clusters = 0;
  double linked_fraction = 0.0;
};

// Nodes are all clusters of the partition (attribute size = member count);
// edges only where the rule classifies the pair as collaboration, weighted by
// the number of cross-cluster co-author relationships.
GroupCollabNetwork build_group_collab_network(const Network& coauthor, const Partition& part,
                                              const std::map<std::string, NodeRoleProfile>& profiles,
                                              const Corpus& corpus, const AuthorTable& table,
                                              const CollabRule& rule = default_collab_rule);

class ContinentMap {
 public:
  static ContinentMap load(std::istream& in);  // csv: country_code,continent
  void add(const std::string& code, const std::string& continent);
  // Unknown codes fall into "Other".
  std::string continent(const std::string& code) const;
  bool empty() const { return code_to_continent_.empty(); }

 private:
  std::map<std::string, std::string> code_to_continent_;
};

// Country occurrence counts over the publications with at least one member
// author.
std::map<std::string, long long> cluster_country_counts(const std::set<std::string>& members,
                                                        const AuthorTable& table,
                                                        const Corpus& corpus);

// Continent of the most-listed country; a two-continent label (alphabetical
// pair joined by '/') when the runner-up country has at least half the top
// count and sits on a different continent. "Other" without address data.
std::string geographic_affiliation(const std::map<std::string, long long>& country_counts,
                                   const ContinentMap& continents);

struct TopicalActivity {
  std::map<int, double> activity;  // area id -> share of the pub set
  bool used_all_members = false;   // no hubs, fell back to every member
  bool empty_pub_set = false;
  std::size_t pub_count = 0;
};

// Activity share per topic area over the publications of the cluster's hub
// authors (all members when the cluster has no hub).
TopicalActivity topical_activity(const std::set<std::string>& members,
                                 const std::map<std::string, NodeRoleProfile>& profiles,
                                 const TopicAreas& areas, const AuthorTable& table);

// Fig-9 style shade: white at 0, black above 0.9, linear grey in between.
std::string activity_grayscale_hex(double activity);

// Categorical color for a continent label.
std::string continent_color_hex(const std::string& label);

struct PropensityCell {
  bool available = false;  // false -> "N.A."
  double deviation_pct = 0.0;
  long long observed_links = 0;
};

struct PropensityTable {
  std::vector<std::string> affiliations;  // sorted
  std::map<std::string, int> group_count;
  std::map<std::string, double> avg_degree;
  std::vector<std::vector<PropensityCell>> cells;  // [source][target]
  std::string note;
};

// Deviation in percent of observed collaboration-partner shares from the
// group-count-proportional null model; the source group is excluded from its
// own affiliation's target pool.
PropensityTable geographic_propensity(const Network& collab,
                                      const std::map<std::string, std::string>& affiliation);

}  // namespace pubnet
