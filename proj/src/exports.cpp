#include "pubnet/exports.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include "pubnet/text.hpp"

namespace pubnet {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string trim_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return std::string(buf);
}

}  // namespace

void write_graphml(const Network& net, std::ostream& out) {
  std::set<std::string> num_keys, str_keys;
  for (const auto& [node, attrs] : net.node_num_attrs)
    for (const auto& [key, v] : attrs) num_keys.insert(key);
  for (const auto& [node, attrs] : net.node_str_attrs)
    for (const auto& [key, v] : attrs) str_keys.insert(key);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  if (!net.note.empty()) out << "  <desc>" << xml_escape(net.note) << "</desc>\n";
  for (const auto& key : num_keys)
    out << "  <key id=\"n_" << xml_escape(key) << "\" for=\"node\" attr.name=\"" << xml_escape(key)
        << "\" attr.type=\"double\"/>\n";
  for (const auto& key : str_keys)
    out << "  <key id=\"s_" << xml_escape(key) << "\" for=\"node\" attr.name=\"" << xml_escape(key)
        << "\" attr.type=\"string\"/>\n";
  out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
  out << "  <graph edgedefault=\"" << (net.directed ? "directed" : "undirected") << "\">\n";
  for (const auto& id : net.nodes) {
    out << "    <node id=\"" << xml_escape(id) << "\"";
    auto num_it = net.node_num_attrs.find(id);
    auto str_it = net.node_str_attrs.find(id);
    if (num_it == net.node_num_attrs.end() && str_it == net.node_str_attrs.end()) {
      out << "/>\n";
      continue;
    }
    out << ">\n";
    if (num_it != net.node_num_attrs.end())
      for (const auto& [key, value] : num_it->second)
        out << "      <data key=\"n_" << xml_escape(key) << "\">" << trim_number(value)
            << "</data>\n";
    if (str_it != net.node_str_attrs.end())
      for (const auto& [key, value] : str_it->second)
        out << "      <data key=\"s_" << xml_escape(key) << "\">" << xml_escape(value)
            << "</data>\n";
    out << "    </node>\n";
  }
  int edge_id = 0;
  for (const auto& [key, weight] : net.edges) {
    out << "    <edge id=\"e" << edge_id++ << "\" source=\"" << xml_escape(key.first)
        << "\" target=\"" << xml_escape(key.second) << "\">"
        << "<data key=\"weight\">" << trim_number(weight) << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_dot(const Network& net, std::ostream& out) {
  out << (net.directed ? "digraph" : "graph") << " g {\n";
  if (!net.note.empty()) out << "  // " << net.note << "\n";
  for (const auto& id : net.nodes) {
    out << "  \"" << dot_escape(id) << "\"";
    std::vector<std::string> attrs;
    auto num_it = net.node_num_attrs.find(id);
    if (num_it != net.node_num_attrs.end())
      for (const auto& [key, value] : num_it->second)
        attrs.push_back(key + "=\"" + trim_number(value) + "\"");
    auto str_it = net.node_str_attrs.find(id);
    if (str_it != net.node_str_attrs.end())
      for (const auto& [key, value] : str_it->second)
        attrs.push_back(key + "=\"" + dot_escape(value) + "\"");
    if (!attrs.empty()) out << " [" << join(attrs, ", ") << "]";
    out << ";\n";
  }
  const char* arrow = net.directed ? " -> " : " -- ";
  for (const auto& [key, weight] : net.edges)
    out << "  \"" << dot_escape(key.first) << "\"" << arrow << "\"" << dot_escape(key.second)
        << "\" [weight=\"" << trim_number(weight) << "\"];\n";
  out << "}\n";
}

void write_edge_csv(const Network& net, std::ostream& out) {
  out << "source,target,weight\n";
  for (const auto& [key, weight] : net.edges)
    out << key.first << ',' << key.second << ',' << trim_number(weight) << '\n';
}

void write_association_csv(const AssociationMatrix& matrix, std::ostream& out) {
  out << "source";
  for (int id : matrix.area_ids) out << ",a" << id;
  out << ",row_total,chi2,df,p\n";
  for (std::size_t s = 0; s < matrix.area_count(); ++s) {
    out << 'a' << matrix.area_ids[s];
    for (std::size_t t = 0; t < matrix.area_count(); ++t) {
      out << ',';
      if (s == t)
        out << 0;
      else if (matrix.residual_defined[s][t])
        out << format_double(matrix.residuals[s][t], 4);
      else
        out << "NA";
    }
    const auto& test = matrix.row_tests[s];
    out << ',' << matrix.row_total(s) << ',' << format_double(test.statistic, 4) << ',' << test.df
        << ',' << format_double(test.p_value, 6);
    if (matrix.row_flagged[s]) out << ",flagged";
    out << '\n';
  }
}

void write_heatmap_csv(const AssociationMatrix& matrix, std::ostream& out) {
  out << "source,target,actual,expected,residual\n";
  for (std::size_t s = 0; s < matrix.area_count(); ++s)
    for (std::size_t t = 0; t < matrix.area_count(); ++t) {
      if (s == t) continue;
      out << 'a' << matrix.area_ids[s] << ",a" << matrix.area_ids[t] << ','
          << matrix.actual[s][t] << ',' << format_double(matrix.expected[s][t], 6) << ',';
      if (matrix.residual_defined[s][t])
        out << format_double(matrix.residuals[s][t], 6);
      else
        out << "NA";
      out << '\n';
    }
}

void write_roles_csv(const std::map<std::string, NodeRoleProfile>& profiles, std::ostream& out) {
  out << "node,z,p,role\n";
  for (const auto& [node, profile] : profiles)
    out << node << ',' << format_double(profile.z, 6) << ',' << format_double(profile.p, 6) << ','
        << role_name(profile.role) << '\n';
}

void write_distortion_csv(const DistortionReport& report, std::ostream& out) {
  out << "role,commonality,cumulative_probability\n";
  for (const auto& [role, cdf] : report.per_role_cdf)
    for (const auto& [value, prob] : cdf)
      out << role_name(role) << ',' << trim_number(value) << ',' << format_double(prob, 6) << '\n';
}

std::string distortion_summary(const DistortionReport& report) {
  std::ostringstream out;
  out << "role populations:";
  for (const auto& [role, count] : report.role_counts) out << ' ' << role_name(role) << '=' << count;
  out << '\n';
  if (!report.sufficient) {
    out << "insufficient: fewer than two roles reach the minimum population of "
        << report.min_population << '\n';
    return out.str();
  }
  out << "max pairwise KS distance: " << format_double(*report.max_ks, 4) << '\n';
  for (const auto& pair : report.pairs)
    out << role_name(pair.a) << " vs " << role_name(pair.b) << ": D="
        << format_double(pair.distance, 4) << " critical=" << format_double(pair.critical, 4)
        << (pair.distance > pair.critical ? " EXCEEDS" : "") << '\n';
  out << "pairs above critical value (alpha=" << format_double(report.alpha, 2)
      << "): " << report.flagged.size() << '\n';
  return out.str();
}

void write_rir_csv(const std::vector<RirSeries>& series, std::ostream& out) {
  out << "area,year,rate,numerator,denominator\n";
  for (const auto& s : series)
    for (const auto& point : s.points)
      out << 'a' << s.area_id << ',' << point.year << ',' << format_double(point.rate, 6) << ','
          << point.numerator << ',' << point.denominator << '\n';
}

void write_areas_tsv(const TopicAreas& areas, std::ostream& out) {
  for (const auto& area : areas.areas)
    for (const auto& doc : area.doc_ids) out << area.area_id << '\t' << doc << '\n';
}

std::string label_metadata_text(const TopicAreas& areas,
                                const std::map<int, LabelMetadata>& metadata) {
  std::ostringstream out;
  for (const auto& area : areas.areas) {
    out << "area a" << area.area_id << " (" << area.size() << " documents)\n";
    auto it = metadata.find(area.area_id);
    if (it == metadata.end()) continue;
    auto list = [&](const char* name, const std::vector<std::pair<std::string, long long>>& items) {
      out << "  " << name << ":";
      for (const auto& [value, count] : items) out << ' ' << value << " (" << count << ")";
      out << '\n';
    };
    list("journals", it->second.journals);
    list("authors", it->second.authors);
    list("title terms", it->second.title_terms);
  }
  return out.str();
}

void write_propensity_csv(const PropensityTable& table, std::ostream& out) {
  if (!table.note.empty()) out << "# " << table.note << '\n';
  out << "affiliation,groups,avg_degree";
  for (const auto& label : table.affiliations) out << ',' << label;
  out << '\n';
  for (std::size_t s = 0; s < table.affiliations.size(); ++s) {
    const std::string& label = table.affiliations[s];
    out << label << ',' << table.group_count.at(label) << ','
        << format_double(table.avg_degree.at(label), 1);
    for (std::size_t t = 0; t < table.affiliations.size(); ++t) {
      const auto& cell = table.cells[s][t];
      out << ',';
      if (cell.available)
        out << format_double(cell.deviation_pct, 0) << '%';
      else
        out << "N.A.";
    }
    out << '\n';
  }
}

}  // namespace pubnet
