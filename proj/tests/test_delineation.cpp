#include "doctest.h"
#include "helpers.hpp"
#include "pubnet/delineation.hpp"

using namespace pubnet;

TEST_CASE("self-citation network") {
  SUBCASE("no self-citations: edgeless, all publications as nodes") {
    std::vector<BiblioRecord> pubs = {testutil::record("R1", 1995, {{"A", "A"}}),
                                      testutil::record("R2", 1996, {{"A", "A"}})};
    auto net = self_citation_network(pubs);
    CHECK(net.node_count() == 2);
    CHECK(net.edge_count() == 0);
  }
  SUBCASE("chain of self-citations") {
    std::vector<BiblioRecord> pubs = {testutil::record("R1", 1995, {{"A", "A"}}, {"R2"}),
                                      testutil::record("R2", 1996, {{"A", "A"}}, {"R3"}),
                                      testutil::record("R3", 1997, {{"A", "A"}})};
    auto net = self_citation_network(pubs);
    CHECK(net.edge_count() == 2);
    CHECK(net.edges.count({"R1", "R2"}) == 1);
    CHECK(net.edges.count({"R2", "R3"}) == 1);
  }
  SUBCASE("citations outside the researcher's output create no edge") {
    std::vector<BiblioRecord> pubs = {
        testutil::record("R1", 1995, {{"A", "A"}}, {"SOMEONE ELSE, 1990, J X"})};
    auto net = self_citation_network(pubs);
    CHECK(net.edge_count() == 0);
  }
  SUBCASE("empty publication list is an error") {
    CHECK_THROWS_AS(self_citation_network({}), std::invalid_argument);
  }
}

namespace {

// A researcher with two disjoint self-citation blocks, each a directed cycle
// with a chord so the flow stays recurrent; block FA sits inside the field
// corpus, block XB outside it.
std::vector<BiblioRecord> two_topic_researcher() {
  std::vector<BiblioRecord> pubs;
  for (const std::string prefix : {"FA", "XB"}) {
    pubs.push_back(testutil::record(prefix + "0", 1995, {{"A", "A"}}, {prefix + "1", prefix + "2"}));
    pubs.push_back(testutil::record(prefix + "1", 1996, {{"A", "A"}}, {prefix + "2"}));
    pubs.push_back(testutil::record(prefix + "2", 1997, {{"A", "A"}}, {prefix + "3"}));
    pubs.push_back(testutil::record(prefix + "3", 1998, {{"A", "A"}}, {prefix + "0"}));
  }
  return pubs;
}

Corpus field_with(std::initializer_list<const char*> ids) {
  std::vector<BiblioRecord> records;
  for (const char* id : ids) records.push_back(testutil::record(id, 1995, {{"F", "F"}}));
  return normalize_corpus(std::move(records)).corpus;
}

}  // namespace

TEST_CASE("recall report") {
  SUBCASE("all publications inside the field corpus score overlap 1") {
    auto pubs = two_topic_researcher();
    auto field = field_with({"FA0", "FA1", "FA2", "FA3", "XB0", "XB1", "XB2", "XB3"});
    auto report = recall_report("dr-a", pubs, field, 1, 10);
    for (const auto& cluster : report.clusters) CHECK(cluster.overlap == doctest::Approx(1.0));
  }
  SUBCASE("planted two-topic researcher: overlaps 0 and 1, low overlap first") {
    auto pubs = two_topic_researcher();
    auto field = field_with({"FA0", "FA1", "FA2", "FA3"});
    auto report = recall_report("dr-a", pubs, field, 1, 10);
    REQUIRE(report.clusters.size() == 2);
    CHECK(report.clusters[0].overlap == doctest::Approx(0.0));
    CHECK(report.clusters[1].overlap == doctest::Approx(1.0));
    CHECK(report.clusters[0].doc_count == 4);
    CHECK_FALSE(report.clusters[0].sample_titles.empty());
  }
}

namespace {

// Author-activity fixture with a planted checkerboard: areas {1,3} share
// authors, areas {2,4} share authors, no overlap across the two sets.
Corpus checkerboard_corpus(bool bridged) {
  std::vector<BiblioRecord> records;
  int next = 0;
  auto add = [&](const std::string& area_prefix,
                 std::vector<std::pair<std::string, std::string>> authors) {
    records.push_back(
        testutil::record(area_prefix + std::to_string(next++), 1995 + next % 10, authors));
  };
  for (int i = 0; i < 6; ++i) {
    add("A", {{"ODD" + std::to_string(i % 3), "O"}});
    add("C", {{"ODD" + std::to_string(i % 3), "O"}});
    add("B", {{"EVEN" + std::to_string(i % 3), "E"}});
    add("D", {{"EVEN" + std::to_string(i % 3), "E"}});
  }
  // Bridges concentrate in areas A and B only (two publications in each), so
  // their activity is disproportionate there and links the two sets.
  if (bridged)
    for (int i = 0; i < 4; ++i)
      for (int repeat = 0; repeat < 2; ++repeat) {
        add("A", {{"BRIDGE" + std::to_string(i), "B"}});
        add("B", {{"BRIDGE" + std::to_string(i), "B"}});
      }
  return normalize_corpus(std::move(records)).corpus;
}

TopicAreas checkerboard_areas(const Corpus& corpus) {
  TopicAreas areas;
  for (int a = 1; a <= 4; ++a) {
    TopicArea area;
    area.area_id = a;
    areas.areas.push_back(area);
  }
  for (const auto& rec : corpus.records()) {
    char prefix = rec.record_id[0];
    int area = prefix - 'A';  // A->0, B->1, C->2, D->3
    areas.areas[area].doc_ids.insert(rec.record_id);
  }
  areas.total_docs = corpus.size();
  // Order by size descending as the extractor would.
  std::stable_sort(areas.areas.begin(), areas.areas.end(),
                   [](const TopicArea& x, const TopicArea& y) { return x.size() > y.size(); });
  return areas;
}

}  // namespace

TEST_CASE("precision report") {
  SUBCASE("checkerboard splits into the planted two components") {
    auto corpus = checkerboard_corpus(false);
    auto areas = checkerboard_areas(corpus);
    auto report = precision_report(corpus, areas, 4);
    CHECK(report.disjoint_flag);
    REQUIRE(report.components.size() == 2);
    // Areas 1=A, 2=B, 3=C, 4=D: components {1,3} and {2,4}.
    std::set<std::set<int>> expected{{1, 3}, {2, 4}};
    std::set<std::set<int>> got(report.components.begin(), report.components.end());
    CHECK(got == expected);
  }
  SUBCASE("bridging authors join everything into one component") {
    auto corpus = checkerboard_corpus(true);
    auto areas = checkerboard_areas(corpus);
    auto report = precision_report(corpus, areas, 4);
    CHECK_FALSE(report.disjoint_flag);
    CHECK(report.components.size() == 1);
  }
  SUBCASE("adding cross-area authors never increases the component count") {
    auto plain = precision_report(checkerboard_corpus(false),
                                  checkerboard_areas(checkerboard_corpus(false)), 4);
    auto bridged = precision_report(checkerboard_corpus(true),
                                    checkerboard_areas(checkerboard_corpus(true)), 4);
    CHECK(bridged.components.size() <= plain.components.size());
  }
  SUBCASE("fewer than two areas is an error") {
    auto corpus = checkerboard_corpus(false);
    TopicAreas one;
    TopicArea area;
    area.area_id = 1;
    for (const auto& rec : corpus.records()) area.doc_ids.insert(rec.record_id);
    one.areas = {area};
    CHECK_THROWS_AS(precision_report(corpus, one, 4), std::invalid_argument);
  }
}
