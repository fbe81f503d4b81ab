#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "pubnet/topics.hpp"

using namespace pubnet;

namespace {

std::map<std::string, int> docmap_of(std::initializer_list<std::pair<const char*, int>> entries) {
  std::map<std::string, int> docmap;
  for (const auto& [doc, cluster] : entries) docmap[doc] = cluster;
  return docmap;
}

}  // namespace

TEST_CASE("extract_topic_areas: min_fraction 0 keeps every cluster, coverage 1") {
  auto docmap = docmap_of({{"d1", 0}, {"d2", 0}, {"d3", 1}, {"d4", 2}});
  auto areas = extract_topic_areas(docmap, 4, 0.0);
  CHECK(areas.areas.size() == 3);
  CHECK(areas.coverage == doctest::Approx(1.0));
  // Ordered by size descending, ids 1..m.
  CHECK(areas.areas[0].area_id == 1);
  CHECK(areas.areas[0].size() == 2);
}

TEST_CASE("extract_topic_areas: size threshold and coverage") {
  std::map<std::string, int> docmap;
  for (int i = 0; i < 60; ++i) docmap["a" + std::to_string(i)] = 0;
  for (int i = 0; i < 30; ++i) docmap["b" + std::to_string(i)] = 1;
  for (int i = 0; i < 10; ++i) docmap["c" + std::to_string(i)] = 2;
  // threshold: ceil(0.2 * 100) = 20 documents
  auto areas = extract_topic_areas(docmap, 100, 0.2);
  CHECK(areas.areas.size() == 2);
  CHECK(areas.coverage == doctest::Approx(0.9));
  CHECK(areas.areas[0].size() == 60);
  CHECK(areas.areas[1].size() == 30);
  // Coverage equals the sum of kept sizes over total exactly.
  CHECK(areas.coverage == doctest::Approx((60.0 + 30.0) / 100.0));
}

namespace {

// Corpus where area docs in `year` cite a controlled mix of in-corpus and
// external references.
Corpus rir_corpus() {
  std::vector<BiblioRecord> records;
  // Cited targets inside the corpus, published 1993.
  for (int i = 0; i < 6; ++i)
    records.push_back(testutil::record("T" + std::to_string(i), 1993, {{"A", "A"}}));
  // Citing docs published 1995: refs to T0..T3 (in-window, matched), plus
  // unmatched strings with years in and out of window.
  records.push_back(testutil::record(
      "C1", 1995, {{"B", "B"}},
      {"T0", "T1", "EXT X, 1992, J FOO", "EXT Y, 1995, J FOO", "EXT Z, 1989, J OLD"}));
  records.push_back(testutil::record("C2", 1995, {{"B", "B"}}, {"T2", "T3", "EXT Q, 1994, J BAR"}));
  return normalize_corpus(std::move(records)).corpus;
}

}  // namespace

TEST_CASE("reference inclusion rate: window rule and matched share") {
  auto corpus = rir_corpus();
  TopicArea area;
  area.area_id = 1;
  area.doc_ids = {"C1", "C2", "T0", "T1", "T2", "T3", "T4", "T5"};

  auto point = reference_inclusion_rate(area, corpus, 1995, 5);
  REQUIRE(point.has_value());
  // In window [1990,1994]: T0..T3 (matched, year from the cited record),
  // 1992 and 1994 externals. 1995 (same year) and 1989 fall outside.
  CHECK(point->denominator == 6);
  CHECK(point->numerator == 4);
  CHECK(point->rate == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("reference inclusion rate: all in-window refs matched gives 1.0") {
  std::vector<BiblioRecord> records;
  records.push_back(testutil::record("T0", 1992, {{"A", "A"}}));
  records.push_back(testutil::record("C0", 1995, {{"B", "B"}}, {"T0"}));
  auto corpus = normalize_corpus(std::move(records)).corpus;
  TopicArea area;
  area.doc_ids = {"C0", "T0"};
  auto point = reference_inclusion_rate(area, corpus, 1995, 5);
  REQUIRE(point.has_value());
  CHECK(point->rate == doctest::Approx(1.0));
}

TEST_CASE("reference inclusion rate: zero denominator is an omitted point") {
  auto corpus = rir_corpus();
  TopicArea area;
  area.doc_ids = {"T4", "T5"};  // no publications in 1995
  CHECK_FALSE(reference_inclusion_rate(area, corpus, 1995, 5).has_value());
}

TEST_CASE("rir series: omitted years, determinism, planted monotone ramp") {
  // Year y in 1996..2000 cites ramp_matched(y) in-corpus refs out of 5.
  std::vector<BiblioRecord> records;
  for (int i = 0; i < 5; ++i)
    records.push_back(testutil::record("T" + std::to_string(i), 1994, {{"A", "A"}}));
  int matched_count = 1;
  for (int year = 1996; year <= 2000; ++year, ++matched_count) {
    std::vector<std::string> refs;
    for (int r = 0; r < 5; ++r) {
      if (r < matched_count)
        refs.push_back("T" + std::to_string(r));
      else
        refs.push_back("EXT, " + std::to_string(year - 1) + ", J OUT");
    }
    records.push_back(testutil::record("C" + std::to_string(year), year, {{"B", "B"}}, refs));
  }
  auto corpus = normalize_corpus(std::move(records)).corpus;
  TopicArea area;
  for (const auto& rec : corpus.records()) area.doc_ids.insert(rec.record_id);
  area.area_id = 1;

  auto series = rir_series(area, corpus, 1996, 2002, 6);
  REQUIRE(series.points.size() == 5);  // 2001, 2002 have no publications
  for (std::size_t i = 1; i < series.points.size(); ++i)
    CHECK(series.points[i].rate > series.points[i - 1].rate);
  for (const auto& point : series.points) {
    CHECK(point.rate >= 0.0);
    CHECK(point.rate <= 1.0);
  }

  auto again = rir_series(area, corpus, 1996, 2002, 6);
  for (std::size_t i = 0; i < series.points.size(); ++i)
    CHECK(series.points[i].rate == again.points[i].rate);
}

TEST_CASE("area label metadata: journals, ties, stopwords, top_n") {
  std::vector<BiblioRecord> records;
  auto r1 = testutil::record("D1", 1995, {{"A", "A"}});
  r1.journal = "J ALPHA";
  r1.title = "Novel catalysts for the synthesis";
  auto r2 = testutil::record("D2", 1996, {{"A", "A"}});
  r2.journal = "J ALPHA";
  r2.title = "Catalysts and surfaces";
  auto r3 = testutil::record("D3", 1997, {{"B", "B"}});
  r3.journal = "J BETA";
  r3.title = "Surfaces of the catalysts";
  records.insert(records.end(), {r1, r2, r3});
  auto corpus = normalize_corpus(std::move(records)).corpus;

  TopicArea area;
  area.doc_ids = {"D1", "D2", "D3"};
  auto meta = area_label_metadata(area, corpus, 5, {"the", "for", "and", "of"});
  REQUIRE(!meta.journals.empty());
  CHECK(meta.journals[0].first == "J ALPHA");
  CHECK(meta.journals[0].second == 2);
  CHECK(meta.title_terms[0].first == "catalysts");
  CHECK(meta.title_terms[0].second == 3);
  // Tie between surfaces (2) and the rest (1); alphabetical within equal counts.
  CHECK(meta.title_terms[1].first == "surfaces");
  CHECK(meta.authors[0].first == "A/A");
  CHECK(meta.authors[0].second == 2);

  // top_n larger than the distinct journal count returns the full list.
  auto wide = area_label_metadata(area, corpus, 50, {});
  CHECK(wide.journals.size() == 2);
}

TEST_CASE("single-journal area ranks that journal with its count") {
  std::vector<BiblioRecord> records;
  for (int i = 0; i < 3; ++i) {
    auto rec = testutil::record("D" + std::to_string(i), 1995, {{"A", "A"}});
    rec.journal = "J ONLY";
    records.push_back(rec);
  }
  auto corpus = normalize_corpus(std::move(records)).corpus;
  TopicArea area;
  area.doc_ids = {"D0", "D1", "D2"};
  auto meta = area_label_metadata(area, corpus, 5, {});
  REQUIRE(meta.journals.size() == 1);
  CHECK(meta.journals[0].first == "J ONLY");
  CHECK(meta.journals[0].second == 3);
}

TEST_CASE("inter-area citation network") {
  std::vector<BiblioRecord> records;
  records.push_back(testutil::record("A1", 1995, {{"X", "X"}}, {"B1", "B2"}));
  records.push_back(testutil::record("A2", 1996, {{"X", "X"}}, {"A1"}));  // intra-area
  records.push_back(testutil::record("B1", 1993, {{"Y", "Y"}}));
  records.push_back(testutil::record("B2", 1994, {{"Y", "Y"}}, {"A1"}));
  auto corpus = normalize_corpus(std::move(records)).corpus;

  TopicAreas areas;
  TopicArea a;
  a.area_id = 1;
  a.doc_ids = {"A1", "A2"};
  TopicArea b;
  b.area_id = 2;
  b.doc_ids = {"B1", "B2"};
  areas.areas = {a, b};
  areas.total_docs = 4;

  auto net = inter_area_citation_network(areas, corpus);
  CHECK(net.directed);
  CHECK(net.edges.at({"a1", "a2"}) == doctest::Approx(2.0));
  CHECK(net.edges.at({"a2", "a1"}) == doctest::Approx(1.0));
  CHECK(net.node_num_attrs.at("a1").at("size") == doctest::Approx(2.0));

  SUBCASE("total weight equals the brute-force matched cross-area count") {
    auto doc_area = areas.doc_to_area();
    long long cross = 0;
    for (const auto& rec : corpus.records())
      for (const auto& ref : rec.cited_refs) {
        if (!ref.matched()) continue;
        auto s = doc_area.find(rec.record_id);
        auto t = doc_area.find(ref.matched_record_id);
        if (s != doc_area.end() && t != doc_area.end() && s->second != t->second) ++cross;
      }
    CHECK(net.total_weight() == doctest::Approx(static_cast<double>(cross)));
  }

  SUBCASE("no cross-area citations: empty edge set") {
    TopicAreas only;
    TopicArea single;
    single.area_id = 1;
    single.doc_ids = {"B1"};
    TopicArea other;
    other.area_id = 2;
    other.doc_ids = {"A2"};
    only.areas = {single, other};
    auto empty_net = inter_area_citation_network(only, corpus);
    CHECK(empty_net.edge_count() == 0);
  }
}

TEST_CASE("stopword file loads lowercase and skips comments") {
  std::istringstream in("# comment\nThe\nof\n\nAND\n");
  auto words = load_stopwords(in);
  CHECK(words.count("the") == 1);
  CHECK(words.count("of") == 1);
  CHECK(words.count("and") == 1);
  CHECK(words.size() == 3);
}
