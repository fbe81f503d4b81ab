#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pubnet {

struct AuthorName {
  std::string last_name;    // normalized uppercase
  std::string initials;
  std::string resolved_id;  // empty when no disambiguated identity is known

  // Identity key: the resolved id when present, otherwise LAST/INITIALS.
  std::string identity() const;
  bool operator==(const AuthorName&) const = default;
};

struct CitedRef {
  std::string raw;
  std::optional<int> year;        // from the ", YYYY," token when parseable
  std::string matched_record_id;  // empty when unmatched

  bool matched() const { return !matched_record_id.empty(); }
};

struct BiblioRecord {
  std::string record_id;
  int year = 0;
  std::vector<AuthorName> authors;
  std::string title;
  std::string journal;
  std::vector<std::string> subject_categories;  // sorted, unique
  std::vector<std::string> addresses;           // country codes, one per address line
  std::vector<CitedRef> cited_refs;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<BiblioRecord> records);  // records sorted by id

  const std::vector<BiblioRecord>& records() const { return records_; }
  const BiblioRecord* find(const std::string& record_id) const;
  bool contains(const std::string& record_id) const { return find(record_id) != nullptr; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  std::vector<BiblioRecord> records_;
  std::map<std::string, std::size_t> index_;
};

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

// Positions are 1-based, matching the order of authors on the record.
struct DisambiguationMap {
  std::map<std::pair<std::string, int>, std::string> resolved;
};

DisambiguationMap read_disambiguation_map(std::istream& in);

struct NormalizeOptions {
  std::optional<std::pair<int, int>> year_range;  // inclusive; records outside are dropped
  const DisambiguationMap* disambiguation = nullptr;
};

struct NormalizeResult {
  Corpus corpus;
  std::vector<ParseIssue> warnings;
};

// Deduplicates by record id (first occurrence wins), normalizes names,
// applies the optional disambiguation map, and resolves cited references by
// exact record-id match on the raw string.
NormalizeResult normalize_corpus(std::vector<BiblioRecord> records,
                                 const NormalizeOptions& options = {});

// Canonical one-record-per-line form. write(read(x)) is a fixed point.
void write_canonical(const Corpus& corpus, std::ostream& out);
std::vector<BiblioRecord> read_canonical(std::istream& in, std::vector<ParseIssue>* issues = nullptr);
Corpus load_canonical(std::istream& in);

struct FilterResult {
  Corpus corpus;
  std::size_t removed = 0;
};

// Keeps records whose subject categories intersect `allowed`. Throws
// std::invalid_argument when `allowed` is empty.
FilterResult apply_subject_filter(const Corpus& corpus, const std::set<std::string>& allowed);

struct AuthorInfo {
  long long publication_count = 0;
  std::set<std::string> record_ids;
  std::string last_name;
  std::string initials;
};

struct AuthorTable {
  std::map<std::string, AuthorInfo> entries;  // identity -> info
};

struct AuthorTableResult {
  AuthorTable table;               // authors with publication_count >= min_pubs
  long long total_authors = 0;     // before filtering
  long long one_time_authors = 0;  // authors with exactly one publication
  long long removed = 0;           // authors below min_pubs
};

AuthorTableResult build_author_table(const Corpus& corpus, int min_pubs);

// Number of distinct author identities sharing each last name.
std::map<std::string, int> last_name_commonality(const AuthorTable& table);

}  // namespace pubnet
