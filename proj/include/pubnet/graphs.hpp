#pragma once

#include <optional>

#include "pubnet/biblio.hpp"
#include "pubnet/network.hpp"

namespace pubnet {

struct CoauthorOptions {
  // Records with more authors than this contribute no co-author edges.
  // Unset = no cap.
  std::optional<int> max_authors_per_record;
};

// Undirected network over the author identities in `table`; edge weight =
// number of records co-authored; node attribute pub_count.
Network build_coauthor_graph(const Corpus& corpus, const AuthorTable& table,
                             const CoauthorOptions& options = {});

// Directed, unit-weight citation network over record ids. Records without
// any in- or out-link inside the corpus are excluded.
Network build_citation_graph(const Corpus& corpus);

}  // namespace pubnet
