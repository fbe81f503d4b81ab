#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pubnet/config.hpp"

namespace pubnet {

// Line items of the two summary tables. Proportions are always recomputed
// from the counts, never stored.
struct SummaryCounts {
  std::optional<long long> publications;
  std::optional<long long> authors;
  std::optional<long long> one_time_authors;
  std::optional<long long> documents_excl_singletons;
  std::optional<long long> document_clusters;
  std::optional<long long> clusters_of_clusters;
  std::optional<long long> authors_after_filtering;
  std::optional<long long> coauthor_clusters;
  std::optional<long long> nodes_in_giant;
  std::optional<long long> clusters_in_giant;
  std::optional<long long> linked_clusters;
};

SummaryCounts read_counts(std::istream& in);  // key=value lines
std::string format_summary(const SummaryCounts& counts);

// Pipeline stages in execution order.
enum class Stage { ingest, authors, graph, cluster, roles, topics, affinity, collab, report };

const char* stage_name(Stage stage);
std::optional<Stage> stage_from_name(const std::string& name);

struct StageError : std::runtime_error {
  StageError(Stage stage, const std::string& message);
  Stage stage;
};

class Workspace {
 public:
  explicit Workspace(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path path(const std::string& artifact) const { return root_ / artifact; }
  bool has(const std::string& artifact) const;
  std::string read(const std::string& artifact) const;

 private:
  std::filesystem::path root_;
};

// Executes the pipeline up to `upto` (inclusive). Stages whose inputs are
// unchanged since the last run leave their artifacts untouched. Deterministic:
// identical config and inputs produce byte-identical workspaces.
Workspace run_pipeline(const PipelineConfig& config, const std::filesystem::path& root,
                       Stage upto = Stage::report);

// Artifact export: pure views over the staged files. Throws with the list of
// valid artifact/format pairs on unknown names, and names the stage to run
// when an artifact is missing.
void export_artifact(const Workspace& workspace, const std::string& artifact,
                     const std::string& format, std::ostream& out);
std::vector<std::string> list_exports();

}  // namespace pubnet
