#include "pubnet/biblio.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pubnet/text.hpp"

namespace pubnet {

std::string AuthorName::identity() const {
  if (!resolved_id.empty()) return resolved_id;
  return last_name + "/" + initials;
}

Corpus::Corpus(std::vector<BiblioRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const BiblioRecord& a, const BiblioRecord& b) { return a.record_id < b.record_id; });
  for (std::size_t i = 0; i < records_.size(); ++i) index_[records_[i].record_id] = i;
}

const BiblioRecord* Corpus::find(const std::string& record_id) const {
  auto it = index_.find(record_id);
  return it == index_.end() ? nullptr : &records_[it->second];
}

DisambiguationMap read_disambiguation_map(std::istream& in) {
  DisambiguationMap map;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    char delim = t.find('\t') != std::string::npos ? '\t' : ',';
    auto cols = split(t, delim);
    if (cols.size() < 3) continue;
    auto pos = parse_int(cols[1]);
    if (!pos || *pos < 1) continue;
    map.resolved[{trim(cols[0]), *pos}] = trim(cols[2]);
  }
  return map;
}

namespace {

std::optional<int> extract_ref_year(const std::string& raw) {
  // The year is the first comma-separated token that parses as a plausible
  // publication year.
  for (const auto& token : split(raw, ',')) {
    auto y = parse_int(token);
    if (y && *y >= 1000 && *y <= 2999) return y;
  }
  return std::nullopt;
}

void normalize_record_fields(BiblioRecord& rec) {
  rec.record_id = sanitize_list_item(rec.record_id);
  rec.title = sanitize_text_field(rec.title);
  rec.journal = sanitize_list_item(rec.journal);
  for (auto& a : rec.authors) {
    a.last_name = upper_ascii_fold(sanitize_name_part(a.last_name));
    a.initials = upper_ascii_fold(sanitize_name_part(a.initials));
    a.resolved_id = sanitize_name_part(a.resolved_id);
  }
  std::set<std::string> cats;
  for (const auto& c : rec.subject_categories) {
    std::string s = sanitize_list_item(c);
    if (!s.empty()) cats.insert(s);
  }
  rec.subject_categories.assign(cats.begin(), cats.end());
  for (auto& addr : rec.addresses) addr = sanitize_list_item(addr);
  for (auto& ref : rec.cited_refs) {
    ref.raw = sanitize_list_item(ref.raw);
    ref.year = extract_ref_year(ref.raw);
    ref.matched_record_id.clear();
  }
}

}  // namespace

NormalizeResult normalize_corpus(std::vector<BiblioRecord> records, const NormalizeOptions& options) {
  NormalizeResult result;
  std::vector<BiblioRecord> kept;
  std::set<std::string> seen;
  std::size_t position = 0;
  for (auto& rec : records) {
    ++position;
    normalize_record_fields(rec);
    if (options.year_range &&
        (rec.year < options.year_range->first || rec.year > options.year_range->second)) {
      result.warnings.push_back(
          {position, "record " + rec.record_id + ": year " + std::to_string(rec.year) +
                         " outside corpus range, dropped"});
      continue;
    }
    if (!seen.insert(rec.record_id).second) {
      result.warnings.push_back({position, "duplicate record id " + rec.record_id + ", dropped"});
      continue;
    }
    if (options.disambiguation) {
      for (std::size_t i = 0; i < rec.authors.size(); ++i) {
        auto it = options.disambiguation->resolved.find({rec.record_id, static_cast<int>(i) + 1});
        if (it != options.disambiguation->resolved.end()) rec.authors[i].resolved_id = it->second;
      }
    }
    kept.push_back(std::move(rec));
  }

  // Reference matching: the raw string must equal another record's id.
  for (auto& rec : kept) {
    for (auto& ref : rec.cited_refs) {
      if (ref.raw != rec.record_id && seen.count(ref.raw)) ref.matched_record_id = ref.raw;
    }
  }
  result.corpus = Corpus(std::move(kept));
  return result;
}

namespace {

// Canonical line: id \t year \t authors \t title \t journal \t categories \t
// addresses \t refs. Authors are LAST/INITIALS/RESOLVED joined by ';'; the
// remaining list fields are ';'-joined.
std::string canonical_line(const BiblioRecord& rec) {
  std::vector<std::string> authors;
  authors.reserve(rec.authors.size());
  for (const auto& a : rec.authors)
    authors.push_back(a.last_name + "/" + a.initials + "/" + a.resolved_id);
  std::vector<std::string> refs;
  refs.reserve(rec.cited_refs.size());
  for (const auto& r : rec.cited_refs) refs.push_back(r.raw);
  std::string line;
  line += rec.record_id;
  line += '\t';
  line += std::to_string(rec.year);
  line += '\t';
  line += join(authors, ";");
  line += '\t';
  line += rec.title;
  line += '\t';
  line += rec.journal;
  line += '\t';
  line += join(rec.subject_categories, ";");
  line += '\t';
  line += join(rec.addresses, ";");
  line += '\t';
  line += join(refs, ";");
  return line;
}

}  // namespace

void write_canonical(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.records()) out << canonical_line(rec) << '\n';
}

std::vector<BiblioRecord> read_canonical(std::istream& in, std::vector<ParseIssue>* issues) {
  std::vector<BiblioRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 8) {
      if (issues) issues->push_back({lineno, "expected 8 tab-separated fields"});
      continue;
    }
    BiblioRecord rec;
    rec.record_id = fields[0];
    auto year = parse_int(fields[1]);
    if (rec.record_id.empty() || !year) {
      if (issues) issues->push_back({lineno, "missing record id or year"});
      continue;
    }
    rec.year = *year;
    if (!fields[2].empty()) {
      for (const auto& a : split(fields[2], ';')) {
        auto parts = split(a, '/');
        AuthorName name;
        name.last_name = parts.size() > 0 ? parts[0] : "";
        name.initials = parts.size() > 1 ? parts[1] : "";
        name.resolved_id = parts.size() > 2 ? parts[2] : "";
        rec.authors.push_back(std::move(name));
      }
    }
    rec.title = fields[3];
    rec.journal = fields[4];
    if (!fields[5].empty()) rec.subject_categories = split(fields[5], ';');
    if (!fields[6].empty()) rec.addresses = split(fields[6], ';');
    if (!fields[7].empty()) {
      for (const auto& raw : split(fields[7], ';')) {
        CitedRef ref;
        ref.raw = raw;
        rec.cited_refs.push_back(std::move(ref));
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

Corpus load_canonical(std::istream& in) {
  return normalize_corpus(read_canonical(in)).corpus;
}

FilterResult apply_subject_filter(const Corpus& corpus, const std::set<std::string>& allowed) {
  if (allowed.empty()) throw std::invalid_argument("subject filter: allowed set is empty");
  FilterResult result;
  std::vector<BiblioRecord> kept;
  for (const auto& rec : corpus.records()) {
    bool keep = false;
    for (const auto& cat : rec.subject_categories) {
      if (allowed.count(cat)) {
        keep = true;
        break;
      }
    }
    if (keep)
      kept.push_back(rec);
    else
      ++result.removed;
  }
  // Matching state is rebuilt since removed records can no longer be cited.
  result.corpus = normalize_corpus(std::move(kept)).corpus;
  return result;
}

AuthorTableResult build_author_table(const Corpus& corpus, int min_pubs) {
  if (min_pubs < 1) throw std::invalid_argument("build_author_table: min_pubs must be >= 1");
  AuthorTableResult result;
  AuthorTable all;
  for (const auto& rec : corpus.records()) {
    for (const auto& author : rec.authors) {
      auto& info = all.entries[author.identity()];
      if (info.record_ids.insert(rec.record_id).second) ++info.publication_count;
      if (info.last_name.empty()) {
        info.last_name = author.last_name;
        info.initials = author.initials;
      }
    }
  }
  result.total_authors = static_cast<long long>(all.entries.size());
  for (auto& [identity, info] : all.entries) {
    if (info.publication_count == 1) ++result.one_time_authors;
    if (info.publication_count >= min_pubs)
      result.table.entries.emplace(identity, std::move(info));
    else
      ++result.removed;
  }
  return result;
}

std::map<std::string, int> last_name_commonality(const AuthorTable& table) {
  std::map<std::string, int> counts;
  for (const auto& [identity, info] : table.entries) ++counts[info.last_name];
  return counts;
}

}  // namespace pubnet
