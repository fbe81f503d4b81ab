#include "pubnet/affinity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <gsl/gsl_cdf.h>

namespace pubnet {

const char* association_mode_name(AssociationMode mode) {
  return mode == AssociationMode::citation ? "citation" : "author_activity";
}

long long AssociationMatrix::row_total(std::size_t s) const {
  long long total = 0;
  for (long long a : actual[s]) total += a;
  return total;
}

std::vector<std::vector<long long>> out_of_area_counts(const TopicAreas& areas,
                                                       const Corpus& corpus,
                                                       AssociationMode mode) {
  const std::size_t m = areas.areas.size();
  std::map<int, std::size_t> area_index;
  for (std::size_t i = 0; i < m; ++i) area_index[areas.areas[i].area_id] = i;
  auto doc_area = areas.doc_to_area();
  std::vector<std::vector<long long>> actual(m, std::vector<long long>(m, 0));

  if (mode == AssociationMode::citation) {
    for (const auto& rec : corpus.records()) {
      auto source = doc_area.find(rec.record_id);
      if (source == doc_area.end()) continue;
      for (const auto& ref : rec.cited_refs) {
        if (!ref.matched()) continue;
        auto target = doc_area.find(ref.matched_record_id);
        if (target == doc_area.end() || target->second == source->second) continue;
        ++actual[area_index.at(source->second)][area_index.at(target->second)];
      }
    }
    return actual;
  }

  // Author activity: publications per author per area.
  std::map<std::string, std::vector<long long>> author_pubs;
  for (const auto& rec : corpus.records()) {
    auto it = doc_area.find(rec.record_id);
    if (it == doc_area.end()) continue;
    std::size_t area = area_index.at(it->second);
    std::set<std::string> identities;
    for (const auto& author : rec.authors) identities.insert(author.identity());
    for (const auto& identity : identities) {
      auto& pubs = author_pubs[identity];
      if (pubs.empty()) pubs.assign(m, 0);
      ++pubs[area];
    }
  }
  for (const auto& [identity, pubs] : author_pubs) {
    for (std::size_t s = 0; s < m; ++s) {
      if (pubs[s] < 1) continue;
      for (std::size_t t = 0; t < m; ++t)
        if (t != s) actual[s][t] += pubs[t];
    }
  }
  return actual;
}

std::vector<double> expected_counts(const std::vector<long long>& actual_row,
                                    std::size_t source_index,
                                    const std::vector<long long>& sizes) {
  long long size_sum = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t)
    if (t != source_index) size_sum += sizes[t];
  if (size_sum <= 0) throw std::invalid_argument("expected_counts: all target sizes are zero");
  long long row_total = 0;
  for (std::size_t t = 0; t < actual_row.size(); ++t)
    if (t != source_index) row_total += actual_row[t];
  std::vector<double> expected(actual_row.size(), 0.0);
  for (std::size_t t = 0; t < actual_row.size(); ++t) {
    if (t == source_index) continue;
    expected[t] = static_cast<double>(sizes[t] * row_total) / static_cast<double>(size_sum);
  }
  return expected;
}

ChiSquareResult chi_square_row(const std::vector<long long>& actual_row,
                               const std::vector<double>& expected_row,
                               std::size_t source_index) {
  ChiSquareResult result;
  int populated = 0;
  for (std::size_t t = 0; t < actual_row.size(); ++t) {
    if (t == source_index || !(expected_row[t] > 0.0)) continue;
    ++populated;
    const double diff = static_cast<double>(actual_row[t]) - expected_row[t];
    result.statistic += diff * diff / expected_row[t];
  }
  result.df = populated > 0 ? populated - 1 : 0;
  result.p_value = result.df > 0 ? gsl_cdf_chisq_Q(result.statistic, result.df) : 1.0;
  return result;
}

AssociationMatrix association_from_counts(AssociationMode mode, std::vector<int> area_ids,
                                          std::vector<long long> sizes,
                                          std::vector<std::vector<long long>> actual) {
  const std::size_t m = area_ids.size();
  if (sizes.size() != m || actual.size() != m)
    throw std::invalid_argument("association_from_counts: shape mismatch");
  AssociationMatrix matrix;
  matrix.mode = mode;
  matrix.area_ids = std::move(area_ids);
  matrix.sizes = std::move(sizes);
  matrix.actual = std::move(actual);
  matrix.expected_num.assign(m, std::vector<long long>(m, 0));
  matrix.expected_den.assign(m, 0);
  matrix.expected.assign(m, std::vector<double>(m, 0.0));
  matrix.residuals.assign(m, std::vector<double>(m, std::numeric_limits<double>::quiet_NaN()));
  matrix.residual_defined.assign(m, std::vector<char>(m, 0));
  matrix.row_flagged.assign(m, 0);
  matrix.row_tests.resize(m);

  for (std::size_t s = 0; s < m; ++s) {
    if (matrix.actual[s].size() != m)
      throw std::invalid_argument("association_from_counts: shape mismatch");
    matrix.actual[s][s] = 0;  // the diagonal is excluded by definition
    long long den = 0;
    for (std::size_t t = 0; t < m; ++t)
      if (t != s) den += matrix.sizes[t];
    matrix.expected_den[s] = den;
    long long row_total = matrix.row_total(s);
    for (std::size_t t = 0; t < m; ++t) {
      if (t == s) continue;
      matrix.expected_num[s][t] = matrix.sizes[t] * row_total;
      matrix.expected[s][t] = den > 0 ? static_cast<double>(matrix.expected_num[s][t]) /
                                            static_cast<double>(den)
                                      : 0.0;
      if (matrix.expected_num[s][t] > 0 && den > 0) {
        // (actual - expected) / expected as an exact integer ratio.
        const long long numerator = matrix.actual[s][t] * den - matrix.expected_num[s][t];
        matrix.residuals[s][t] =
            static_cast<double>(numerator) / static_cast<double>(matrix.expected_num[s][t]);
        matrix.residual_defined[s][t] = 1;
      } else if (matrix.actual[s][t] > 0) {
        matrix.row_flagged[s] = 1;
      }
    }
    matrix.row_tests[s] = chi_square_row(matrix.actual[s], matrix.expected[s], s);
  }
  return matrix;
}

AssociationMatrix association_matrix(const TopicAreas& areas, const Corpus& corpus,
                                     AssociationMode mode) {
  std::vector<int> ids;
  std::vector<long long> sizes;
  for (const auto& area : areas.areas) {
    ids.push_back(area.area_id);
    sizes.push_back(static_cast<long long>(area.size()));
  }
  return association_from_counts(mode, std::move(ids), std::move(sizes),
                                 out_of_area_counts(areas, corpus, mode));
}

Network affinity_network(const AssociationMatrix& matrix, double threshold) {
  NetworkBuilder builder(true);
  for (std::size_t i = 0; i < matrix.area_count(); ++i) {
    std::string id = "a" + std::to_string(matrix.area_ids[i]);
    builder.add_node(id);
    builder.set_num_attr(id, "size", static_cast<double>(matrix.sizes[i]));
  }
  for (std::size_t s = 0; s < matrix.area_count(); ++s)
    for (std::size_t t = 0; t < matrix.area_count(); ++t) {
      if (s == t || !matrix.residual_defined[s][t]) continue;
      if (matrix.residuals[s][t] > threshold)
        builder.add_edge("a" + std::to_string(matrix.area_ids[s]),
                         "a" + std::to_string(matrix.area_ids[t]), matrix.residuals[s][t]);
    }
  Network net = builder.build();
  net.note =
      "Edges carry positive residuals versus the size-proportional baseline; "
      "a missing edge can still carry links at or below that baseline.";
  return net;
}

}  // namespace pubnet
