#include "pubnet/workspace.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pubnet/affinity.hpp"
#include "pubnet/biblio.hpp"
#include "pubnet/collab.hpp"
#include "pubnet/community.hpp"
#include "pubnet/delineation.hpp"
#include "pubnet/exports.hpp"
#include "pubnet/graphs.hpp"
#include "pubnet/mapequation.hpp"
#include "pubnet/roles.hpp"
#include "pubnet/text.hpp"
#include "pubnet/topics.hpp"
#include "pubnet/wos.hpp"

namespace fs = std::filesystem;

namespace pubnet {

namespace {

const char* kStageNames[] = {"ingest", "authors", "graph",    "cluster", "roles",
                             "topics", "affinity", "collab",  "report"};

struct CountField {
  const char* key;
  std::optional<long long> SummaryCounts::* member;
};

const CountField kCountFields[] = {
    {"publications", &SummaryCounts::publications},
    {"authors", &SummaryCounts::authors},
    {"one_time_authors", &SummaryCounts::one_time_authors},
    {"documents_excl_singletons", &SummaryCounts::documents_excl_singletons},
    {"document_clusters", &SummaryCounts::document_clusters},
    {"clusters_of_clusters", &SummaryCounts::clusters_of_clusters},
    {"authors_after_filtering", &SummaryCounts::authors_after_filtering},
    {"coauthor_clusters", &SummaryCounts::coauthor_clusters},
    {"nodes_in_giant", &SummaryCounts::nodes_in_giant},
    {"clusters_in_giant", &SummaryCounts::clusters_in_giant},
    {"linked_clusters", &SummaryCounts::linked_clusters},
};

}  // namespace

const char* stage_name(Stage stage) { return kStageNames[static_cast<int>(stage)]; }

std::optional<Stage> stage_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Stage::report); ++i)
    if (name == kStageNames[i]) return static_cast<Stage>(i);
  return std::nullopt;
}

StageError::StageError(Stage stage_, const std::string& message)
    : std::runtime_error(std::string("[") + stage_name(stage_) + "] " + message), stage(stage_) {}

Workspace::Workspace(fs::path root) : root_(std::move(root)) {}

bool Workspace::has(const std::string& artifact) const { return fs::exists(root_ / artifact); }

std::string Workspace::read(const std::string& artifact) const {
  std::ifstream in(root_ / artifact, std::ios::binary);
  if (!in) throw std::runtime_error("missing workspace artifact: " + artifact);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SummaryCounts read_counts(std::istream& in) {
  SummaryCounts counts;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(t.substr(0, eq));
    auto value = parse_int(t.substr(eq + 1));
    if (!value) continue;
    for (const auto& field : kCountFields)
      if (key == field.key) counts.*(field.member) = *value;
  }
  return counts;
}

namespace {

std::string count_line(const char* label, const std::optional<long long>& value) {
  std::string out = std::string(label) + ": ";
  out += value ? format_thousands(*value) : "not computed";
  return out + "\n";
}

std::string proportion_line(const char* label, const std::optional<long long>& value,
                            const std::optional<long long>& denominator) {
  std::string out = std::string(label) + ": ";
  if (!value) return out + "not computed\n";
  out += format_thousands(*value);
  if (denominator && *denominator > 0)
    out += " (" + format_pct1(static_cast<double>(*value) / static_cast<double>(*denominator)) + ")";
  return out + "\n";
}

}  // namespace

std::string format_summary(const SummaryCounts& c) {
  std::string out;
  out += count_line("publications", c.publications);
  out += count_line("authors", c.authors);
  out += count_line("one-time authors", c.one_time_authors);
  out += count_line("documents excl. singletons", c.documents_excl_singletons);
  out += count_line("document clusters", c.document_clusters);
  out += count_line("clusters of document clusters", c.clusters_of_clusters);
  out += count_line("authors after filtering", c.authors_after_filtering);
  out += count_line("co-author clusters", c.coauthor_clusters);
  out += proportion_line("nodes in giant", c.nodes_in_giant, c.authors_after_filtering);
  out += proportion_line("clusters in giant", c.clusters_in_giant, c.coauthor_clusters);
  out += proportion_line("linked clusters in collaboration network", c.linked_clusters,
                         c.clusters_in_giant);
  return out;
}

namespace {

using nlohmann::json;

std::string read_file_or_throw(const fs::path& path, Stage stage) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageError(stage, "cannot open input file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// In-memory results shared between stages.
struct PipelineState {
  PipelineConfig config;
  std::string raw_input;
  Corpus corpus;
  std::vector<ParseIssue> ingest_issues;
  std::size_t filter_removed = 0;

  AuthorTableResult authors_all;  // min_pubs = 1, for name commonality
  AuthorTableResult authors;      // min_pubs from config

  Network coauthor;
  Network citation;
  Network coauthor_giant;

  DetectResult coauthor_clusters;
  bool have_coauthor_clusters = false;
  DoubleClusterResult doc_clusters;
  bool have_doc_clusters = false;
  Partition giant_partition;
  long long clusters_in_giant = 0;

  std::map<std::string, NodeRoleProfile> profiles;
  DistortionReport distortion;
  bool have_distortion = false;

  TopicAreas areas;
  std::vector<RirSeries> rir;
  std::map<int, LabelMetadata> metadata;
  Network interarea;

  AssociationMatrix assoc_citation;
  AssociationMatrix assoc_author;
  bool have_association = false;

  GroupCollabNetwork collab;
  std::map<std::string, std::string> geo_labels;
  std::map<int, TopicalActivity> activity;
  PropensityTable propensity;
  bool have_collab = false;

  SummaryCounts counts;
};

class PipelineRunner {
 public:
  PipelineRunner(const PipelineConfig& config, const fs::path& root)
      : workspace_(root), manifest_path_(root / "manifest.json") {
    state_.config = config;
    fs::create_directories(root);
    if (fs::exists(manifest_path_)) {
      std::ifstream in(manifest_path_);
      try {
        in >> manifest_;
      } catch (const json::exception&) {
        manifest_ = json::object();
      }
    }
    if (!manifest_.contains("stages")) manifest_["stages"] = json::object();
    if (!manifest_.contains("sequence")) manifest_["sequence"] = 0;
  }

  Workspace run(Stage upto) {
    for (int i = 0; i <= static_cast<int>(upto); ++i) run_stage(static_cast<Stage>(i));
    save_manifest();
    return workspace_;
  }

 private:
  Workspace workspace_;
  fs::path manifest_path_;
  json manifest_;
  PipelineState state_;
  std::map<std::string, std::string> artifact_hash_;

  void run_stage(Stage stage) {
    std::map<std::string, std::string> outputs;
    switch (stage) {
      case Stage::ingest: outputs = stage_ingest(); break;
      case Stage::authors: outputs = stage_authors(); break;
      case Stage::graph: outputs = stage_graph(); break;
      case Stage::cluster: outputs = stage_cluster(); break;
      case Stage::roles: outputs = stage_roles(); break;
      case Stage::topics: outputs = stage_topics(); break;
      case Stage::affinity: outputs = stage_affinity(); break;
      case Stage::collab: outputs = stage_collab(); break;
      case Stage::report: outputs = stage_report(); break;
    }
    record_stage(stage, outputs);
  }

  // Writes only artifacts whose bytes changed; the manifest entry keeps its
  // sequence number when nothing changed, so re-runs are no-ops.
  void record_stage(Stage stage, const std::map<std::string, std::string>& outputs) {
    const std::string name = stage_name(stage);
    std::string input_hash = fnv1a_hex(config_text(state_.config) + state_.raw_input);
    json recorded = json::object();
    bool changed = false;
    for (const auto& [artifact, content] : outputs) {
      std::string hash = fnv1a_hex(content);
      artifact_hash_[artifact] = hash;
      recorded[artifact] = hash;
      fs::path path = workspace_.path(artifact);
      bool same = fs::exists(path) && fnv1a_hex(workspace_.read(artifact)) == hash;
      if (!same) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw StageError(stage, "cannot write artifact: " + path.string());
        out << content;
        changed = true;
      }
    }
    json& entry = manifest_["stages"][name];
    bool entry_current = entry.is_object() && entry.value("inputs", "") == input_hash &&
                         entry.value("outputs", json::object()) == recorded;
    if (!entry_current || changed) {
      int seq = manifest_["sequence"].get<int>() + 1;
      manifest_["sequence"] = seq;
      entry = json::object();
      entry["inputs"] = input_hash;
      entry["outputs"] = recorded;
      entry["sequence"] = seq;
    }
  }

  void save_manifest() {
    std::string text = manifest_.dump(2) + "\n";
    bool same = fs::exists(manifest_path_) && workspace_.read("manifest.json") == text;
    if (same) return;
    std::ofstream out(manifest_path_, std::ios::binary);
    out << text;
  }

  // ---- stages ----

  std::map<std::string, std::string> stage_ingest() {
    const PipelineConfig& c = state_.config;
    if (c.input.empty()) throw StageError(Stage::ingest, "no input file configured");
    state_.raw_input = read_file_or_throw(c.input, Stage::ingest);

    // Canonical lines carry 7 tabs; WoS flat files carry none.
    std::istringstream probe(state_.raw_input);
    std::string first_line;
    while (std::getline(probe, first_line) && trim(first_line).empty()) {
    }
    bool canonical = split(first_line, '\t').size() == 8;

    std::vector<BiblioRecord> records;
    std::vector<ParseIssue> issues;
    std::istringstream in(state_.raw_input);
    if (canonical) {
      records = read_canonical(in, &issues);
    } else {
      auto parsed = parse_wos_flatfile(in);
      records = std::move(parsed.records);
      issues = std::move(parsed.errors);
    }

    DisambiguationMap disambiguation;
    NormalizeOptions options;
    options.year_range = {{c.year_min, c.year_max}};
    if (!c.disambiguation.empty()) {
      std::istringstream map_in(read_file_or_throw(c.disambiguation, Stage::ingest));
      disambiguation = read_disambiguation_map(map_in);
      options.disambiguation = &disambiguation;
    }
    auto normalized = normalize_corpus(std::move(records), options);
    state_.corpus = std::move(normalized.corpus);
    issues.insert(issues.end(), normalized.warnings.begin(), normalized.warnings.end());

    if (!c.subject_filter.empty()) {
      auto filtered = apply_subject_filter(state_.corpus, c.subject_filter);
      state_.corpus = std::move(filtered.corpus);
      state_.filter_removed = filtered.removed;
    }
    state_.ingest_issues = issues;

    std::ostringstream corpus_text;
    write_canonical(state_.corpus, corpus_text);
    std::ostringstream log;
    for (const auto& issue : issues) log << "line " << issue.line << ": " << issue.message << "\n";
    log << "records_kept=" << state_.corpus.size() << "\n";
    log << "subject_filter_removed=" << state_.filter_removed << "\n";

    return {{"corpus.txt", corpus_text.str()},
            {"ingest.log", log.str()},
            {"config.txt", config_text(c)}};
  }

  std::map<std::string, std::string> stage_authors() {
    state_.authors_all = build_author_table(state_.corpus, 1);
    state_.authors = build_author_table(state_.corpus, state_.config.min_pubs);

    std::ostringstream csv;
    csv << "identity,last_name,initials,publications\n";
    for (const auto& [identity, info] : state_.authors.table.entries)
      csv << identity << ',' << info.last_name << ',' << info.initials << ','
          << info.publication_count << '\n';
    std::ostringstream stats;
    stats << "total_authors=" << state_.authors.total_authors << "\n";
    stats << "one_time_authors=" << state_.authors.one_time_authors << "\n";
    stats << "kept=" << state_.authors.table.entries.size() << "\n";
    stats << "removed_below_min_pubs=" << state_.authors.removed << "\n";
    return {{"authors.csv", csv.str()}, {"authors_stats.txt", stats.str()}};
  }

  std::map<std::string, std::string> stage_graph() {
    CoauthorOptions options;
    options.max_authors_per_record = state_.config.max_authors_per_record;
    state_.coauthor = build_coauthor_graph(state_.corpus, state_.authors.table, options);
    state_.citation = build_citation_graph(state_.corpus);

    std::ostringstream stats;
    stats << "authors_after_filtering=" << state_.coauthor.node_count() << "\n";
    stats << "coauthor_edges=" << state_.coauthor.edge_count() << "\n";
    stats << "documents_excl_singletons=" << state_.citation.node_count() << "\n";
    stats << "citation_edges=" << state_.citation.edge_count() << "\n";
    if (!state_.coauthor.nodes.empty()) {
      auto cs = component_stats(state_.coauthor);
      stats << "coauthor_components=" << cs.component_count << "\n";
      stats << "coauthor_giant_nodes=" << cs.giant_size << "\n";
      state_.coauthor_giant = subnetwork(state_.coauthor, weak_components(state_.coauthor).front());
    }
    std::ostringstream coauthor_csv, citation_csv;
    write_edge_csv(state_.coauthor, coauthor_csv);
    write_edge_csv(state_.citation, citation_csv);
    return {{"coauthor_edges.csv", coauthor_csv.str()},
            {"citation_edges.csv", citation_csv.str()},
            {"graph_stats.txt", stats.str()}};
  }

  std::map<std::string, std::string> stage_cluster() {
    const PipelineConfig& c = state_.config;
    DetectOptions options;
    options.map_eq.teleportation = c.teleportation;

    std::ostringstream stats;
    std::ostringstream coauthor_part, doc_part, docmap;
    if (state_.coauthor.total_weight() > 0) {
      state_.coauthor_clusters = detect_communities(state_.coauthor, c.seed, c.trials, options);
      state_.have_coauthor_clusters = true;
      write_partition(state_.coauthor_clusters.partition, coauthor_part);
      stats << "coauthor_clusters=" << state_.coauthor_clusters.partition.cluster_count() << "\n";
      stats << "coauthor_codelength="
            << format_double(state_.coauthor_clusters.codelength.codelength_bits, 6) << "\n";

      std::set<std::string> giant_nodes(state_.coauthor_giant.nodes.begin(),
                                        state_.coauthor_giant.nodes.end());
      std::set<int> giant_clusters;
      for (const auto& [node, cluster] : state_.coauthor_clusters.partition.assignment)
        if (giant_nodes.count(node)) {
          giant_clusters.insert(cluster);
          state_.giant_partition.assignment[node] = cluster;
        }
      state_.clusters_in_giant = static_cast<long long>(giant_clusters.size());
      stats << "clusters_in_giant=" << state_.clusters_in_giant << "\n";
    }
    if (!state_.citation.nodes.empty()) {
      state_.doc_clusters = double_cluster(state_.citation, c.seed, c.trials, options);
      state_.have_doc_clusters = true;
      write_partition(state_.doc_clusters.level1, doc_part);
      for (const auto& [doc, area] : state_.doc_clusters.docmap)
        docmap << doc << '\t' << area << '\n';
      stats << "document_clusters=" << state_.doc_clusters.level1.cluster_count() << "\n";
      stats << "clusters_of_clusters=" << state_.doc_clusters.level2.cluster_count() << "\n";
      stats << "citation_codelength="
            << format_double(state_.doc_clusters.level1_codelength.codelength_bits, 6) << "\n";
    }
    return {{"coauthor_partition.tsv", coauthor_part.str()},
            {"doc_partition.tsv", doc_part.str()},
            {"docmap.tsv", docmap.str()},
            {"cluster_stats.txt", stats.str()}};
  }

  std::map<std::string, std::string> stage_roles() {
    const PipelineConfig& c = state_.config;
    std::ostringstream roles_csv, distortion_csv, summary;
    if (state_.have_coauthor_clusters && !state_.coauthor_giant.nodes.empty()) {
      RoleThresholds thresholds;
      thresholds.hub_z = c.hub_z;
      state_.profiles = role_profiles(state_.coauthor_giant, state_.giant_partition, thresholds);

      auto commonality = last_name_commonality(state_.authors_all.table);
      std::map<std::string, double> node_commonality;
      for (const auto& [identity, profile] : state_.profiles) {
        auto entry = state_.authors.table.entries.find(identity);
        std::string last = entry != state_.authors.table.entries.end() ? entry->second.last_name : "";
        auto it = commonality.find(last);
        node_commonality[identity] = it != commonality.end() ? it->second : 0.0;
      }
      state_.distortion =
          distortion_report(state_.profiles, node_commonality, c.min_population, c.alpha);
      state_.have_distortion = true;

      write_roles_csv(state_.profiles, roles_csv);
      write_distortion_csv(state_.distortion, distortion_csv);
      summary << distortion_summary(state_.distortion);
    }
    return {{"roles.csv", roles_csv.str()},
            {"distortion.csv", distortion_csv.str()},
            {"distortion.txt", summary.str()}};
  }

  std::map<std::string, std::string> stage_topics() {
    const PipelineConfig& c = state_.config;
    std::ostringstream areas_tsv, rir_csv, metadata_txt, interarea_csv, stats;
    if (state_.have_doc_clusters) {
      state_.areas = extract_topic_areas(state_.doc_clusters.docmap, state_.citation.node_count(),
                                         c.min_fraction);
      std::set<std::string> stopwords;
      if (!c.data_dir.empty()) {
        std::ifstream stop_in(fs::path(c.data_dir) / "stopwords.txt");
        if (stop_in) stopwords = load_stopwords(stop_in);
      }
      state_.rir.clear();
      for (const auto& area : state_.areas.areas) {
        state_.rir.push_back(rir_series(area, state_.corpus, c.rir_start, c.rir_end, c.rir_window));
        state_.metadata[area.area_id] =
            area_label_metadata(area, state_.corpus, c.top_terms, stopwords);
      }
      state_.interarea = inter_area_citation_network(state_.areas, state_.corpus);

      write_areas_tsv(state_.areas, areas_tsv);
      write_rir_csv(state_.rir, rir_csv);
      metadata_txt << label_metadata_text(state_.areas, state_.metadata);
      write_edge_csv(state_.interarea, interarea_csv);
      stats << "topic_areas=" << state_.areas.areas.size() << "\n";
      stats << "coverage=" << format_double(state_.areas.coverage, 6) << "\n";
    }
    return {{"areas.tsv", areas_tsv.str()},
            {"rir.csv", rir_csv.str()},
            {"area_metadata.txt", metadata_txt.str()},
            {"interarea_edges.csv", interarea_csv.str()},
            {"topics_stats.txt", stats.str()}};
  }

  std::map<std::string, std::string> stage_affinity() {
    std::ostringstream cit_csv, auth_csv, cit_heat, auth_heat;
    if (state_.have_doc_clusters && state_.areas.areas.size() >= 2) {
      state_.assoc_citation =
          association_matrix(state_.areas, state_.corpus, AssociationMode::citation);
      state_.assoc_author =
          association_matrix(state_.areas, state_.corpus, AssociationMode::author_activity);
      state_.have_association = true;
      write_association_csv(state_.assoc_citation, cit_csv);
      write_association_csv(state_.assoc_author, auth_csv);
      write_heatmap_csv(state_.assoc_citation, cit_heat);
      write_heatmap_csv(state_.assoc_author, auth_heat);
    }
    return {{"association_citation.csv", cit_csv.str()},
            {"association_author.csv", auth_csv.str()},
            {"heatmap_citation.csv", cit_heat.str()},
            {"heatmap_author.csv", auth_heat.str()}};
  }

  std::map<std::string, std::string> stage_collab() {
    const PipelineConfig& c = state_.config;
    std::ostringstream edges_csv, geo_csv, activity_csv, propensity_csv, stats;
    if (state_.have_coauthor_clusters && !state_.giant_partition.assignment.empty()) {
      auto rule = [&](const ClusterPairStats& s) {
        if (s.hub_hub) return true;
        return s.distinct_pairs >= c.min_cross_pairs && s.joint_pubs >= c.min_joint_pubs;
      };
      state_.collab =
          build_group_collab_network(state_.coauthor_giant, state_.giant_partition, state_.profiles,
                                     state_.corpus, state_.authors.table, rule);
      state_.have_collab = true;

      ContinentMap continents;
      if (!c.data_dir.empty()) {
        std::ifstream cont_in(fs::path(c.data_dir) / "continents.csv");
        if (cont_in) continents = ContinentMap::load(cont_in);
      }

      auto clusters = state_.giant_partition.clusters();
      geo_csv << "cluster,size,affiliation,color\n";
      activity_csv << "cluster,area,activity,color\n";
      for (const auto& [cluster, members] : clusters) {
        std::set<std::string> member_set(members.begin(), members.end());
        auto counts = cluster_country_counts(member_set, state_.authors.table, state_.corpus);
        std::string label = geographic_affiliation(counts, continents);
        std::string node = std::to_string(cluster);
        state_.geo_labels[node] = label;
        geo_csv << node << ',' << members.size() << ',' << label << ','
                << continent_color_hex(label) << '\n';
        if (state_.have_doc_clusters && !state_.areas.areas.empty()) {
          auto activity =
              topical_activity(member_set, state_.profiles, state_.areas, state_.authors.table);
          state_.activity[cluster] = activity;
          for (const auto& [area, value] : activity.activity)
            activity_csv << node << ",a" << area << ',' << format_double(value, 6) << ','
                         << activity_grayscale_hex(value) << '\n';
        }
      }
      state_.propensity = geographic_propensity(state_.collab.network, state_.geo_labels);

      write_edge_csv(state_.collab.network, edges_csv);
      write_propensity_csv(state_.propensity, propensity_csv);
      stats << "clusters=" << state_.collab.total_clusters << "\n";
      stats << "linked_clusters=" << state_.collab.linked_clusters << "\n";
    }
    return {{"collab_edges.csv", edges_csv.str()},
            {"collab_geo.csv", geo_csv.str()},
            {"collab_activity.csv", activity_csv.str()},
            {"propensity.csv", propensity_csv.str()},
            {"collab_stats.txt", stats.str()}};
  }

  std::map<std::string, std::string> stage_report() {
    SummaryCounts& counts = state_.counts;
    counts.publications = static_cast<long long>(state_.corpus.size());
    counts.authors = state_.authors.total_authors;
    counts.one_time_authors = state_.authors.one_time_authors;
    counts.documents_excl_singletons = static_cast<long long>(state_.citation.node_count());
    if (state_.have_doc_clusters) {
      counts.document_clusters = state_.doc_clusters.level1.cluster_count();
      counts.clusters_of_clusters = state_.doc_clusters.level2.cluster_count();
    }
    counts.authors_after_filtering = static_cast<long long>(state_.coauthor.node_count());
    if (state_.have_coauthor_clusters) {
      counts.coauthor_clusters = state_.coauthor_clusters.partition.cluster_count();
      counts.nodes_in_giant = static_cast<long long>(state_.coauthor_giant.node_count());
      counts.clusters_in_giant = state_.clusters_in_giant;
    }
    if (state_.have_collab)
      counts.linked_clusters = static_cast<long long>(state_.collab.linked_clusters);

    std::ostringstream counts_txt;
    for (const auto& field : kCountFields) {
      const auto& value = counts.*(field.member);
      if (value) counts_txt << field.key << '=' << *value << '\n';
    }
    return {{"counts.txt", counts_txt.str()}, {"report.txt", format_summary(counts)}};
  }
};

}  // namespace

Workspace run_pipeline(const PipelineConfig& config, const fs::path& root, Stage upto) {
  PipelineRunner runner(config, root);
  return runner.run(upto);
}

namespace {

Network network_from_edge_csv(const std::string& content, bool directed) {
  NetworkBuilder builder(directed);
  std::istringstream in(content);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cols = split(line, ',');
    if (cols.size() < 3) continue;
    builder.add_edge(cols[0], cols[1], std::stod(cols[2]));
  }
  return builder.build();
}

struct ExportSpec {
  const char* artifact;
  const char* source_file;  // staged artifact the view is built from
  Stage stage;
  bool graph;     // graph exports allow graphml/dot/csv; tables only csv
  bool directed;
};

const ExportSpec kExports[] = {
    {"coauthor", "coauthor_edges.csv", Stage::graph, true, false},
    {"citation", "citation_edges.csv", Stage::graph, true, true},
    {"interarea", "interarea_edges.csv", Stage::topics, true, true},
    {"collab", "collab_edges.csv", Stage::collab, true, false},
    {"residuals_citation", "association_citation.csv", Stage::affinity, false, false},
    {"residuals_author", "association_author.csv", Stage::affinity, false, false},
    {"heatmap_citation", "heatmap_citation.csv", Stage::affinity, false, false},
    {"heatmap_author", "heatmap_author.csv", Stage::affinity, false, false},
    {"rir", "rir.csv", Stage::topics, false, false},
    {"roles", "roles.csv", Stage::roles, false, false},
    {"distortion", "distortion.csv", Stage::roles, false, false},
    {"areas", "areas.tsv", Stage::topics, false, false},
    {"propensity", "propensity.csv", Stage::collab, false, false},
    {"partition_coauthor", "coauthor_partition.tsv", Stage::cluster, false, false},
    {"partition_docs", "doc_partition.tsv", Stage::cluster, false, false},
    {"docmap", "docmap.tsv", Stage::cluster, false, false},
    {"report", "report.txt", Stage::report, false, false},
};

}  // namespace

std::vector<std::string> list_exports() {
  std::vector<std::string> out;
  for (const auto& spec : kExports)
    out.push_back(std::string(spec.artifact) + (spec.graph ? " (graphml|dot|csv)" : " (csv)"));
  return out;
}

void export_artifact(const Workspace& workspace, const std::string& artifact,
                     const std::string& format, std::ostream& out) {
  const ExportSpec* spec = nullptr;
  for (const auto& candidate : kExports)
    if (artifact == candidate.artifact) spec = &candidate;
  if (!spec) {
    std::string valid;
    for (const auto& name : list_exports()) valid += "\n  " + name;
    throw std::runtime_error("unknown artifact '" + artifact + "'; valid artifacts:" + valid);
  }
  if (!workspace.has(spec->source_file))
    throw std::runtime_error("artifact '" + artifact + "' is not staged yet; run stage '" +
                             stage_name(spec->stage) + "' first");
  std::string content = workspace.read(spec->source_file);

  if (!spec->graph || format == "csv") {
    if (format != "csv")
      throw std::runtime_error("artifact '" + artifact + "' supports only csv output");
    out << content;
    return;
  }
  Network net = network_from_edge_csv(content, spec->directed);
  if (std::string(spec->artifact) == "collab" && workspace.has("collab_geo.csv")) {
    std::istringstream geo(workspace.read("collab_geo.csv"));
    std::string line;
    std::getline(geo, line);
    while (std::getline(geo, line)) {
      auto cols = split(trim(line), ',');
      if (cols.size() < 4 || !net.has_node(cols[0])) continue;
      net.node_num_attrs[cols[0]]["size"] = std::stod(cols[1]);
      net.node_str_attrs[cols[0]]["affiliation"] = cols[2];
      net.node_str_attrs[cols[0]]["color"] = cols[3];
    }
  }
  if (format == "graphml")
    write_graphml(net, out);
  else if (format == "dot")
    write_dot(net, out);
  else
    throw std::runtime_error("unknown format '" + format + "'; use graphml, dot, or csv");
}

}  // namespace pubnet
