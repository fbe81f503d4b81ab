#include "pubnet/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pubnet/text.hpp"

namespace pubnet {

PipelineConfig default_config() { return PipelineConfig{}; }

std::string config_text(const PipelineConfig& c) {
  std::ostringstream out;
  out << "[corpus]\n";
  out << "input=" << c.input << "\n";
  out << "disambiguation=" << c.disambiguation << "\n";
  out << "year_min=" << c.year_min << "\n";
  out << "year_max=" << c.year_max << "\n";
  out << "subject_filter=" << join({c.subject_filter.begin(), c.subject_filter.end()}, "|") << "\n";
  out << "min_pubs=" << c.min_pubs << "\n";
  out << "max_authors_per_record="
      << (c.max_authors_per_record ? std::to_string(*c.max_authors_per_record) : "") << "\n";
  out << "\n[community]\n";
  out << "seed=" << c.seed << "\n";
  out << "trials=" << c.trials << "\n";
  out << "teleportation=" << format_double(c.teleportation, 6) << "\n";
  out << "\n[topics]\n";
  out << "min_fraction=" << format_double(c.min_fraction, 6) << "\n";
  out << "rir_start=" << c.rir_start << "\n";
  out << "rir_end=" << c.rir_end << "\n";
  out << "rir_window=" << c.rir_window << "\n";
  out << "top_terms=" << c.top_terms << "\n";
  out << "\n[roles]\n";
  out << "hub_z=" << format_double(c.hub_z, 6) << "\n";
  out << "min_population=" << c.min_population << "\n";
  out << "alpha=" << format_double(c.alpha, 6) << "\n";
  out << "\n[affinity]\n";
  out << "threshold=" << format_double(c.affinity_threshold, 6) << "\n";
  out << "\n[collab]\n";
  out << "min_cross_pairs=" << c.min_cross_pairs << "\n";
  out << "min_joint_pubs=" << c.min_joint_pubs << "\n";
  out << "\n[delineation]\n";
  out << "top_k=" << c.top_k << "\n";
  out << "\n[paths]\n";
  out << "data_dir=" << c.data_dir << "\n";
  return out.str();
}

namespace {

double parse_double_or_throw(const std::string& value, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line) + ": bad number '" + value + "'");
  }
}

long long parse_ll_or_throw(const std::string& value, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line) + ": bad integer '" + value + "'");
  }
}

}  // namespace

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig c = default_config();
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = t.substr(1, t.size() - 2);
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = section + "." + trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));

    if (key == "corpus.input") c.input = value;
    else if (key == "corpus.disambiguation") c.disambiguation = value;
    else if (key == "corpus.year_min") c.year_min = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "corpus.year_max") c.year_max = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "corpus.subject_filter") {
      c.subject_filter.clear();
      if (!value.empty())
        for (const auto& cat : split(value, '|'))
          if (!trim(cat).empty()) c.subject_filter.insert(trim(cat));
    } else if (key == "corpus.min_pubs") c.min_pubs = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "corpus.max_authors_per_record") {
      if (value.empty()) c.max_authors_per_record.reset();
      else c.max_authors_per_record = static_cast<int>(parse_ll_or_throw(value, lineno));
    }
    else if (key == "community.seed") c.seed = static_cast<std::uint64_t>(parse_ll_or_throw(value, lineno));
    else if (key == "community.trials") c.trials = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "community.teleportation") c.teleportation = parse_double_or_throw(value, lineno);
    else if (key == "topics.min_fraction") c.min_fraction = parse_double_or_throw(value, lineno);
    else if (key == "topics.rir_start") c.rir_start = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "topics.rir_end") c.rir_end = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "topics.rir_window") c.rir_window = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "topics.top_terms") c.top_terms = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "roles.hub_z") c.hub_z = parse_double_or_throw(value, lineno);
    else if (key == "roles.min_population") c.min_population = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "roles.alpha") c.alpha = parse_double_or_throw(value, lineno);
    else if (key == "affinity.threshold") c.affinity_threshold = parse_double_or_throw(value, lineno);
    else if (key == "collab.min_cross_pairs") c.min_cross_pairs = parse_ll_or_throw(value, lineno);
    else if (key == "collab.min_joint_pubs") c.min_joint_pubs = parse_ll_or_throw(value, lineno);
    else if (key == "delineation.top_k") c.top_k = static_cast<int>(parse_ll_or_throw(value, lineno));
    else if (key == "paths.data_dir") c.data_dir = value;
    else
      throw std::runtime_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace pubnet
