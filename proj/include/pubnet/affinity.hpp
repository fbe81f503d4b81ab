#pragma once

#include <map>
#include <string>
#include <vector>

#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"
#include "pubnet/topics.hpp"

namespace pubnet {

enum class AssociationMode { citation, author_activity };

const char* association_mode_name(AssociationMode mode);

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;          // (#targets with expected > 0) - 1
  double p_value = 1.0;
};

// Actual/expected counts and relative residuals between source and target
// areas; the diagonal is excluded throughout. Expected counts are kept as
// exact integer ratios (sizes[t] * row_total / sum of target sizes) alongside
// their double value, so the row-sum identity holds exactly.
struct AssociationMatrix {
  AssociationMode mode = AssociationMode::citation;
  std::vector<int> area_ids;          // size-descending order
  std::vector<long long> sizes;       // document counts, aligned with area_ids
  std::vector<std::vector<long long>> actual;
  std::vector<std::vector<long long>> expected_num;  // sizes[t] * row_total[s]
  std::vector<long long> expected_den;               // sum over t != s of sizes[t]
  std::vector<std::vector<double>> expected;
  std::vector<std::vector<double>> residuals;        // NaN where undefined
  std::vector<std::vector<char>> residual_defined;
  std::vector<char> row_flagged;  // expected 0 with actual > 0 somewhere in the row
  std::vector<ChiSquareResult> row_tests;

  std::size_t area_count() const { return area_ids.size(); }
  long long row_total(std::size_t s) const;
};

// Citation mode: matched references between areas. Author-activity mode: for
// each author with >= 1 publication in the source area, her publication count
// in every other area.
std::vector<std::vector<long long>> out_of_area_counts(const TopicAreas& areas,
                                                       const Corpus& corpus, AssociationMode mode);

// Expected counts for one source row; throws when all target sizes are zero.
std::vector<double> expected_counts(const std::vector<long long>& actual_row,
                                    std::size_t source_index,
                                    const std::vector<long long>& sizes);

ChiSquareResult chi_square_row(const std::vector<long long>& actual_row,
                               const std::vector<double>& expected_row, std::size_t source_index);

// Full matrix from explicit counts (sizes aligned with rows/columns).
AssociationMatrix association_from_counts(AssociationMode mode, std::vector<int> area_ids,
                                          std::vector<long long> sizes,
                                          std::vector<std::vector<long long>> actual);

AssociationMatrix association_matrix(const TopicAreas& areas, const Corpus& corpus,
                                     AssociationMode mode);

// Directed network over areas with an edge wherever the residual exceeds the
// threshold; every area appears as a node.
Network affinity_network(const AssociationMatrix& matrix, double threshold = 0.0);

}  // namespace pubnet
