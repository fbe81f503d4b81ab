#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"

namespace pubnet {

struct TopicArea {
  int area_id = 0;               // 1..m, assigned by size descending
  std::set<std::string> doc_ids;
  std::string label;             // human-assigned, optional

  std::size_t size() const { return doc_ids.size(); }
};

struct TopicAreas {
  std::vector<TopicArea> areas;  // ordered by size descending
  double coverage = 0.0;         // covered docs / total docs
  std::size_t total_docs = 0;
  double min_fraction = 0.0;

  const TopicArea* find(int area_id) const;
  std::map<std::string, int> doc_to_area() const;
};

// Keeps level-2 clusters with size >= ceil(min_fraction * total_docs); area
// ids 1..m by size descending (ties by smallest member id).
TopicAreas extract_topic_areas(const std::map<std::string, int>& docmap, std::size_t total_docs,
                               double min_fraction = 0.02);

struct RirPoint {
  int year = 0;
  double rate = 0.0;
  long long numerator = 0;
  long long denominator = 0;
};

// Share of references from the area's `year` publications, with cited year in
// [year - window, year - 1], that resolve inside the corpus. Returns nullopt
// when the denominator is zero. A reference's cited year is the year parsed
// from the raw string, falling back to the matched record's year.
std::optional<RirPoint> reference_inclusion_rate(const TopicArea& area, const Corpus& corpus,
                                                 int year, int window = 5);

struct RirSeries {
  int area_id = 0;
  std::vector<RirPoint> points;  // undefined years omitted
};

RirSeries rir_series(const TopicArea& area, const Corpus& corpus, int start = 1996, int end = 2010,
                     int window = 5);

struct LabelMetadata {
  std::vector<std::pair<std::string, long long>> journals;
  std::vector<std::pair<std::string, long long>> authors;      // identity keys
  std::vector<std::pair<std::string, long long>> title_terms;  // lowercased tokens
};

// Frequency-ranked lists (ties alphabetical). Title terms are tokenized on
// non-alphanumeric characters, lowercased, and filtered by `stopwords`.
LabelMetadata area_label_metadata(const TopicArea& area, const Corpus& corpus, int top_n = 5,
                                  const std::set<std::string>& stopwords = {});

std::set<std::string> load_stopwords(std::istream& in);

// Directed network over areas ("a1", "a2", ...); weight(s -> t) = citations
// from documents in s to documents in t; node attribute size.
Network inter_area_citation_network(const TopicAreas& areas, const Corpus& corpus);

}  // namespace pubnet
