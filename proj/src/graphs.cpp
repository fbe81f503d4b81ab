#include "pubnet/graphs.hpp"

#include <set>

namespace pubnet {

Network build_coauthor_graph(const Corpus& corpus, const AuthorTable& table,
                             const CoauthorOptions& options) {
  NetworkBuilder builder(false);
  for (const auto& [identity, info] : table.entries) {
    builder.add_node(identity);
    builder.set_num_attr(identity, "pub_count", static_cast<double>(info.publication_count));
  }
  for (const auto& rec : corpus.records()) {
    if (options.max_authors_per_record &&
        static_cast<int>(rec.authors.size()) > *options.max_authors_per_record)
      continue;
    std::set<std::string> members;
    for (const auto& author : rec.authors) {
      std::string id = author.identity();
      if (table.entries.count(id)) members.insert(id);
    }
    for (auto it = members.begin(); it != members.end(); ++it) {
      auto jt = it;
      for (++jt; jt != members.end(); ++jt) builder.add_edge(*it, *jt, 1.0);
    }
  }
  return builder.build();
}

Network build_citation_graph(const Corpus& corpus) {
  NetworkBuilder builder(true);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rec : corpus.records()) {
    for (const auto& ref : rec.cited_refs) {
      if (!ref.matched()) continue;
      auto key = std::make_pair(rec.record_id, ref.matched_record_id);
      if (seen.insert(key).second) builder.add_edge(key.first, key.second, 1.0);
    }
  }
  return builder.build();
}

}  // namespace pubnet
