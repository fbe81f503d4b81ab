// Command-line front end: pipeline stages, exports, delineation heuristics,
// synthetic benchmarks, and summary reporting over a workspace directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pubnet/biblio.hpp"
#include "pubnet/community.hpp"
#include "pubnet/config.hpp"
#include "pubnet/delineation.hpp"
#include "pubnet/exports.hpp"
#include "pubnet/partition.hpp"
#include "pubnet/text.hpp"
#include "pubnet/topics.hpp"
#include "pubnet/workspace.hpp"
#include "pubnet/wos.hpp"

namespace fs = std::filesystem;
using namespace pubnet;

namespace {

#ifndef PUBNET_DEFAULT_DATA_DIR
#define PUBNET_DEFAULT_DATA_DIR ""
#endif

struct CommonArgs {
  std::string workspace = "workspace";
  std::string config_path;
  std::string input;
  std::string data_dir = PUBNET_DEFAULT_DATA_DIR;
  // flag-level overrides; negative means "not set"
  long long seed = -1;
  int trials = -1;
  int min_pubs = -1;
  double min_frac = -1.0;
  int window = -1;
  int top_k = -1;
};

PipelineConfig effective_config(const CommonArgs& args) {
  PipelineConfig config = args.config_path.empty() ? default_config() : load_config_file(args.config_path);
  if (!args.input.empty()) config.input = args.input;
  if (!args.data_dir.empty() && config.data_dir.empty()) config.data_dir = args.data_dir;
  if (args.seed >= 0) config.seed = static_cast<std::uint64_t>(args.seed);
  if (args.trials >= 0) config.trials = args.trials;
  if (args.min_pubs >= 0) config.min_pubs = args.min_pubs;
  if (args.min_frac >= 0) config.min_fraction = args.min_frac;
  if (args.window >= 0) config.rir_window = args.window;
  if (args.top_k >= 0) config.top_k = args.top_k;
  return config;
}

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool needs_input) {
  cmd->add_option("--workspace,-w", args.workspace, "Workspace directory");
  cmd->add_option("--config,-c", args.config_path, "Configuration file");
  cmd->add_option("--data-dir", args.data_dir, "Directory with continents.csv / stopwords.txt");
  cmd->add_option("--seed", args.seed, "Random seed");
  cmd->add_option("--trials", args.trials, "Clustering restarts");
  cmd->add_option("--min-pubs", args.min_pubs, "Author publication threshold");
  cmd->add_option("--min-frac", args.min_frac, "Topic area minimum size fraction");
  cmd->add_option("--window", args.window, "Reference-inclusion window (years)");
  cmd->add_option("--top-k", args.top_k, "Areas in the precision check");
  if (needs_input) cmd->add_option("--in,-i", args.input, "Input bibliographic file");
}

int run_stage_command(const CommonArgs& args, Stage stage) {
  PipelineConfig config = effective_config(args);
  run_pipeline(config, args.workspace, stage);
  std::cout << "[" << stage_name(stage) << "] done; workspace: " << args.workspace << "\n";
  return 0;
}

std::vector<BiblioRecord> load_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  std::istringstream probe(content);
  std::string first;
  while (std::getline(probe, first) && trim(first).empty()) {
  }
  std::istringstream stream(content);
  if (split(first, '\t').size() == 8) return read_canonical(stream);
  return parse_wos_flatfile(stream).records;
}

Corpus load_workspace_corpus(const Workspace& workspace) {
  if (!workspace.has("corpus.txt"))
    throw std::runtime_error("workspace has no corpus; run 'ingest' first");
  std::istringstream in(workspace.read("corpus.txt"));
  return load_canonical(in);
}

TopicAreas load_workspace_areas(const Workspace& workspace, const PipelineConfig& config) {
  if (!workspace.has("docmap.tsv") || !workspace.has("graph_stats.txt"))
    throw std::runtime_error("workspace has no document clustering; run 'cluster' first");
  std::map<std::string, int> docmap;
  std::istringstream in(workspace.read("docmap.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    auto cols = split(trim(line), '\t');
    if (cols.size() == 2)
      if (auto area = parse_int(cols[1])) docmap[cols[0]] = *area;
  }
  long long total_docs = 0;
  std::istringstream stats(workspace.read("graph_stats.txt"));
  while (std::getline(stats, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos && trim(line.substr(0, eq)) == "documents_excl_singletons")
      total_docs = parse_int(line.substr(eq + 1)).value_or(0);
  }
  return extract_topic_areas(docmap, static_cast<std::size_t>(total_docs), config.min_fraction);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Publication-network community structure toolkit"};
  app.require_subcommand(1);

  CommonArgs args;

  // config
  auto* config_cmd = app.add_subcommand("config", "Show configuration");
  bool show_defaults = false;
  config_cmd->add_flag("--defaults", show_defaults, "Print the default configuration");
  config_cmd->add_option("--config,-c", args.config_path, "Configuration file to echo");

  // pipeline stages
  struct StageCommand {
    const char* name;
    const char* help;
    Stage stage;
  };
  const StageCommand stage_commands[] = {
      {"ingest", "Parse and canonicalize the bibliographic input", Stage::ingest},
      {"authors", "Build the author table", Stage::authors},
      {"graph", "Build co-author and citation networks", Stage::graph},
      {"cluster", "Cluster both networks (double clustering for citations)", Stage::cluster},
      {"roles", "Node roles and the name-distortion report", Stage::roles},
      {"topics", "Topic areas, reference inclusion rates, metadata", Stage::topics},
      {"rir", "Reference inclusion rate series (alias of topics)", Stage::topics},
      {"affinity", "Association matrices and affinity networks", Stage::affinity},
      {"collab", "Group collaboration network and overlays", Stage::collab},
      {"overlay", "Geographic/topical overlays (alias of collab)", Stage::collab},
      {"run", "Run the full pipeline", Stage::report},
      {"report", "Summary tables", Stage::report},
  };
  std::map<std::string, Stage> stage_of_command;
  for (const auto& sc : stage_commands) {
    auto* cmd = app.add_subcommand(sc.name, sc.help);
    add_common_flags(cmd, args, true);
    stage_of_command[sc.name] = sc.stage;
  }
  std::string counts_path;
  app.get_subcommand("report")->add_option("--counts", counts_path,
                                           "Print the summary for a key=value counts fixture");

  // export
  auto* export_cmd = app.add_subcommand("export", "Export a staged artifact");
  std::string artifact, format = "csv", out_path;
  export_cmd->add_option("--artifact,-a", artifact, "Artifact name")->required();
  export_cmd->add_option("--format,-f", format, "graphml | dot | csv");
  export_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");
  export_cmd->add_option("--workspace,-w", args.workspace, "Workspace directory");
  bool list_artifacts = false;
  export_cmd->add_flag("--list", list_artifacts, "List exportable artifacts");

  // delineation
  auto* recall_cmd = app.add_subcommand("delineate-recall",
                                        "Self-citation clusters of one researcher vs the corpus");
  std::string pubs_path, researcher = "researcher";
  recall_cmd->add_option("--pubs", pubs_path, "Researcher publication file")->required();
  recall_cmd->add_option("--researcher", researcher, "Researcher label");
  add_common_flags(recall_cmd, args, false);

  auto* precision_cmd =
      app.add_subcommand("delineate-precision", "Author-activity checkerboard check");
  add_common_flags(precision_cmd, args, false);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted-partition benchmark graph");
  int synth_n = 128, synth_k = 4;
  double synth_pin = 0.25, synth_pout = 0.01;
  long long synth_seed = 1;
  std::string synth_out = "planted";
  synth_cmd->add_option("--n", synth_n, "Nodes");
  synth_cmd->add_option("--k", synth_k, "Blocks");
  synth_cmd->add_option("--p-in", synth_pin, "Intra-block edge probability");
  synth_cmd->add_option("--p-out", synth_pout, "Inter-block edge probability");
  synth_cmd->add_option("--seed", synth_seed, "Seed");
  synth_cmd->add_option("--out", synth_out, "Output prefix (<out>.edges.csv, <out>.truth.tsv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (config_cmd->parsed()) {
      if (show_defaults || args.config_path.empty())
        std::cout << config_text(default_config());
      else
        std::cout << config_text(load_config_file(args.config_path));
      return 0;
    }
    for (const auto& [name, stage] : stage_of_command) {
      auto* cmd = app.get_subcommand(name);
      if (!cmd->parsed()) continue;
      if (name == "report" && !counts_path.empty()) {
        std::ifstream in(counts_path);
        if (!in) throw std::runtime_error("cannot open counts file: " + counts_path);
        std::cout << format_summary(read_counts(in));
        return 0;
      }
      return run_stage_command(args, stage);
    }
    if (export_cmd->parsed()) {
      if (list_artifacts) {
        for (const auto& name : list_exports()) std::cout << name << "\n";
        return 0;
      }
      Workspace workspace{fs::path(args.workspace)};
      std::ostringstream buffer;
      export_artifact(workspace, artifact, format, buffer);
      if (out_path.empty()) {
        std::cout << buffer.str();
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << buffer.str();
      }
      return 0;
    }
    if (recall_cmd->parsed()) {
      PipelineConfig config = effective_config(args);
      Workspace workspace{fs::path(args.workspace)};
      Corpus field = load_workspace_corpus(workspace);
      auto pubs = load_records(pubs_path);
      auto report = recall_report(researcher, pubs, field, config.seed, config.trials);
      std::cout << "researcher: " << report.researcher_id << "\n";
      for (const auto& cluster : report.clusters) {
        std::cout << "cluster " << cluster.cluster_id << ": " << cluster.doc_count
                  << " documents, overlap " << format_double(cluster.overlap, 3) << "\n";
        for (const auto& title : cluster.sample_titles) std::cout << "    " << title << "\n";
      }
      return 0;
    }
    if (precision_cmd->parsed()) {
      PipelineConfig config = effective_config(args);
      Workspace workspace{fs::path(args.workspace)};
      Corpus field = load_workspace_corpus(workspace);
      TopicAreas areas = load_workspace_areas(workspace, config);
      auto report = precision_report(field, areas, config.top_k);
      std::cout << "top areas:";
      for (int id : report.top_areas) std::cout << " a" << id;
      std::cout << "\ncomponents:";
      for (const auto& component : report.components) {
        std::cout << " {";
        bool first = true;
        for (int id : component) {
          std::cout << (first ? "" : ",") << "a" << id;
          first = false;
        }
        std::cout << "}";
      }
      std::cout << "\ndisjoint: " << (report.disjoint_flag ? "yes" : "no") << "\n";
      write_heatmap_csv(report.matrix, std::cout);
      return 0;
    }
    if (synth_cmd->parsed()) {
      auto planted = planted_partition(synth_n, synth_k, synth_pin, synth_pout,
                                       static_cast<std::uint64_t>(synth_seed));
      std::ofstream edges(synth_out + ".edges.csv", std::ios::binary);
      write_edge_csv(planted.network, edges);
      std::ofstream truth(synth_out + ".truth.tsv", std::ios::binary);
      write_partition(planted.truth, truth);
      std::cout << "wrote " << synth_out << ".edges.csv and " << synth_out << ".truth.tsv\n";
      return 0;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
