#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

namespace pubnet {

// Pipeline configuration, read from sectioned key=value text. Every field has
// a default; `defaults_text()` prints the full file.
struct PipelineConfig {
  // [corpus]
  std::string input;              // WoS flat file or canonical corpus
  std::string disambiguation;    // optional map path
  int year_min = 1991;
  int year_max = 2010;
  std::set<std::string> subject_filter;  // empty = no filtering
  int min_pubs = 2;
  std::optional<int> max_authors_per_record;

  // [community]
  std::uint64_t seed = 1;
  int trials = 20;
  double teleportation = 0.15;

  // [topics]
  double min_fraction = 0.02;
  int rir_start = 1996;
  int rir_end = 2010;
  int rir_window = 5;
  int top_terms = 5;

  // [roles]
  double hub_z = 2.5;
  int min_population = 30;
  double alpha = 0.05;

  // [affinity]
  double affinity_threshold = 0.0;

  // [collab]
  long long min_cross_pairs = 2;
  long long min_joint_pubs = 2;

  // [delineation]
  int top_k = 4;

  // [paths]
  std::string data_dir;
};

PipelineConfig default_config();
std::string config_text(const PipelineConfig& config);

// Parses sectioned key=value text over the defaults; unknown keys are an
// error naming the line.
PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config_file(const std::string& path);

}  // namespace pubnet
