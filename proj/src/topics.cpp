#include "pubnet/topics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>

#include "pubnet/text.hpp"

namespace pubnet {

const TopicArea* TopicAreas::find(int area_id) const {
  for (const auto& area : areas)
    if (area.area_id == area_id) return &area;
  return nullptr;
}

std::map<std::string, int> TopicAreas::doc_to_area() const {
  std::map<std::string, int> out;
  for (const auto& area : areas)
    for (const auto& doc : area.doc_ids) out[doc] = area.area_id;
  return out;
}

TopicAreas extract_topic_areas(const std::map<std::string, int>& docmap, std::size_t total_docs,
                               double min_fraction) {
  TopicAreas result;
  result.total_docs = total_docs;
  result.min_fraction = min_fraction;

  std::map<int, std::set<std::string>> clusters;
  for (const auto& [doc, cluster] : docmap) clusters[cluster].insert(doc);

  const std::size_t min_size =
      static_cast<std::size_t>(std::ceil(min_fraction * static_cast<double>(total_docs)));
  std::vector<std::pair<int, const std::set<std::string>*>> kept;
  for (const auto& [cluster, docs] : clusters)
    if (docs.size() >= std::max<std::size_t>(min_size, 1)) kept.push_back({cluster, &docs});
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second->size() != b.second->size()) return a.second->size() > b.second->size();
    return *a.second->begin() < *b.second->begin();
  });

  std::size_t covered = 0;
  int next_id = 1;
  for (const auto& [cluster, docs] : kept) {
    TopicArea area;
    area.area_id = next_id++;
    area.doc_ids = *docs;
    covered += docs->size();
    result.areas.push_back(std::move(area));
  }
  result.coverage =
      total_docs == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total_docs);
  return result;
}

namespace {

std::optional<int> cited_year(const CitedRef& ref, const Corpus& corpus) {
  if (ref.year) return ref.year;
  if (ref.matched()) {
    if (const BiblioRecord* rec = corpus.find(ref.matched_record_id)) return rec->year;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RirPoint> reference_inclusion_rate(const TopicArea& area, const Corpus& corpus,
                                                 int year, int window) {
  RirPoint point;
  point.year = year;
  for (const auto& doc : area.doc_ids) {
    const BiblioRecord* rec = corpus.find(doc);
    if (!rec || rec->year != year) continue;
    for (const auto& ref : rec->cited_refs) {
      auto cy = cited_year(ref, corpus);
      if (!cy || *cy < year - window || *cy > year - 1) continue;
      ++point.denominator;
      if (ref.matched() && corpus.contains(ref.matched_record_id)) ++point.numerator;
    }
  }
  if (point.denominator == 0) return std::nullopt;
  point.rate = static_cast<double>(point.numerator) / static_cast<double>(point.denominator);
  return point;
}

RirSeries rir_series(const TopicArea& area, const Corpus& corpus, int start, int end, int window) {
  RirSeries series;
  series.area_id = area.area_id;
  for (int year = start; year <= end; ++year)
    if (auto point = reference_inclusion_rate(area, corpus, year, window))
      series.points.push_back(*point);
  return series;
}

std::set<std::string> load_stopwords(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    words.insert(w);
  }
  return words;
}

namespace {

std::vector<std::pair<std::string, long long>> ranked(const std::map<std::string, long long>& counts,
                                                      int top_n) {
  std::vector<std::pair<std::string, long long>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (top_n >= 0 && out.size() > static_cast<std::size_t>(top_n)) out.resize(top_n);
  return out;
}

}  // namespace

LabelMetadata area_label_metadata(const TopicArea& area, const Corpus& corpus, int top_n,
                                  const std::set<std::string>& stopwords) {
  std::map<std::string, long long> journals, authors, terms;
  for (const auto& doc : area.doc_ids) {
    const BiblioRecord* rec = corpus.find(doc);
    if (!rec) continue;
    if (!rec->journal.empty()) ++journals[rec->journal];
    for (const auto& author : rec->authors) ++authors[author.identity()];
    std::string token;
    auto flush = [&] {
      if (!token.empty() && !stopwords.count(token)) ++terms[token];
      token.clear();
    };
    for (char c : rec->title) {
      if (std::isalnum(static_cast<unsigned char>(c)))
        token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      else
        flush();
    }
    flush();
  }
  LabelMetadata meta;
  meta.journals = ranked(journals, top_n);
  meta.authors = ranked(authors, top_n);
  meta.title_terms = ranked(terms, top_n);
  return meta;
}

Network inter_area_citation_network(const TopicAreas& areas, const Corpus& corpus) {
  auto doc_area = areas.doc_to_area();
  NetworkBuilder builder(true);
  for (const auto& area : areas.areas) {
    std::string id = "a" + std::to_string(area.area_id);
    builder.add_node(id);
    builder.set_num_attr(id, "size", static_cast<double>(area.size()));
  }
  for (const auto& rec : corpus.records()) {
    auto source = doc_area.find(rec.record_id);
    if (source == doc_area.end()) continue;
    for (const auto& ref : rec.cited_refs) {
      if (!ref.matched()) continue;
      auto target = doc_area.find(ref.matched_record_id);
      if (target == doc_area.end() || target->second == source->second) continue;
      builder.add_edge("a" + std::to_string(source->second), "a" + std::to_string(target->second),
                       1.0);
    }
  }
  return builder.build();
}

}  // namespace pubnet
