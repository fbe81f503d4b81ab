#include "pubnet/wos.hpp"

#include <istream>

#include "pubnet/text.hpp"

namespace pubnet {

namespace {

const std::pair<const char*, const char*> kBuiltinCountries[] = {
    {"USA", "US"},           {"UNITED STATES", "US"},
    {"CANADA", "CA"},        {"MEXICO", "MX"},
    {"BRAZIL", "BR"},        {"ARGENTINA", "AR"},
    {"CHILE", "CL"},         {"ENGLAND", "GB"},
    {"SCOTLAND", "GB"},      {"WALES", "GB"},
    {"NORTH IRELAND", "GB"}, {"UNITED KINGDOM", "GB"},
    {"UK", "GB"},            {"GERMANY", "DE"},
    {"FED REP GER", "DE"},   {"FRANCE", "FR"},
    {"ITALY", "IT"},         {"SPAIN", "ES"},
    {"PORTUGAL", "PT"},      {"NETHERLANDS", "NL"},
    {"BELGIUM", "BE"},       {"SWITZERLAND", "CH"},
    {"AUSTRIA", "AT"},       {"SWEDEN", "SE"},
    {"NORWAY", "NO"},        {"DENMARK", "DK"},
    {"FINLAND", "FI"},       {"ICELAND", "IS"},
    {"IRELAND", "IE"},       {"POLAND", "PL"},
    {"CZECH REPUBLIC", "CZ"},{"SLOVAKIA", "SK"},
    {"HUNGARY", "HU"},       {"ROMANIA", "RO"},
    {"BULGARIA", "BG"},      {"GREECE", "GR"},
    {"RUSSIA", "RU"},        {"USSR", "RU"},
    {"UKRAINE", "UA"},       {"TURKEY", "TR"},
    {"ISRAEL", "IL"},        {"SAUDI ARABIA", "SA"},
    {"IRAN", "IR"},          {"INDIA", "IN"},
    {"PAKISTAN", "PK"},      {"PEOPLES R CHINA", "CN"},
    {"CHINA", "CN"},         {"TAIWAN", "TW"},
    {"HONG KONG", "HK"},     {"JAPAN", "JP"},
    {"SOUTH KOREA", "KR"},   {"KOREA", "KR"},
    {"SINGAPORE", "SG"},     {"MALAYSIA", "MY"},
    {"THAILAND", "TH"},      {"VIETNAM", "VN"},
    {"INDONESIA", "ID"},     {"AUSTRALIA", "AU"},
    {"NEW ZEALAND", "NZ"},   {"SOUTH AFRICA", "ZA"},
    {"EGYPT", "EG"},         {"NIGERIA", "NG"},
    {"KENYA", "KE"},         {"MOROCCO", "MA"},
    {"TUNISIA", "TN"},       {"ALGERIA", "DZ"},
    {"ESTONIA", "EE"},       {"LATVIA", "LV"},
    {"LITHUANIA", "LT"},     {"SLOVENIA", "SI"},
    {"CROATIA", "HR"},       {"SERBIA", "RS"},
    {"YUGOSLAVIA", "RS"},    {"LUXEMBOURG", "LU"},
    {"COLOMBIA", "CO"},      {"PERU", "PE"},
    {"VENEZUELA", "VE"},     {"CUBA", "CU"},
};

}  // namespace

const CountryNames& CountryNames::builtin() {
  static const CountryNames instance = [] {
    CountryNames c;
    for (const auto& [name, code] : kBuiltinCountries) c.add(name, code);
    return c;
  }();
  return instance;
}

CountryNames CountryNames::load(std::istream& in) {
  CountryNames c;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto cols = split(t, ',');
    if (cols.size() >= 2) c.add(trim(cols[0]), trim(cols[1]));
  }
  return c;
}

void CountryNames::add(const std::string& name, const std::string& code) {
  name_to_code_[upper_ascii_fold(name)] = upper_ascii_fold(code);
}

std::optional<std::string> CountryNames::code_for_address(const std::string& address_line) const {
  std::string addr = trim(address_line);
  // Newer exports prefix the address with a bracketed author list.
  if (!addr.empty() && addr.front() == '[') {
    auto close = addr.find(']');
    if (close != std::string::npos) addr = trim(addr.substr(close + 1));
  }
  if (addr.empty()) return std::nullopt;
  if (addr.back() == '.') addr.pop_back();
  auto comma = addr.rfind(',');
  std::string tail = trim(comma == std::string::npos ? addr : addr.substr(comma + 1));
  if (tail.empty()) return std::nullopt;
  std::string key = upper_ascii_fold(tail);
  auto it = name_to_code_.find(key);
  if (it != name_to_code_.end()) return it->second;
  // "NY 14853 USA" style: the country is the last word of the token.
  auto space = key.rfind(' ');
  if (space != std::string::npos) {
    it = name_to_code_.find(trim(key.substr(space + 1)));
    if (it != name_to_code_.end()) return it->second;
  }
  return std::nullopt;
}

namespace {

struct RawField {
  std::string tag;
  std::vector<std::string> values;  // one entry per physical line
};

AuthorName parse_author(const std::string& value) {
  AuthorName name;
  auto comma = value.find(',');
  if (comma == std::string::npos) {
    name.last_name = trim(value);
  } else {
    name.last_name = trim(value.substr(0, comma));
    name.initials = trim(value.substr(comma + 1));
  }
  return name;
}

void finish_record(std::vector<RawField>& fields, std::size_t first_line,
                   const CountryNames& countries, WosParseResult& out) {
  if (fields.empty()) return;
  BiblioRecord rec;
  bool has_year = false;
  std::vector<std::string> title_parts;
  for (const auto& field : fields) {
    if (field.tag == "UT") {
      if (!field.values.empty()) rec.record_id = trim(field.values.front());
    } else if (field.tag == "PY") {
      if (!field.values.empty()) {
        if (auto y = parse_int(field.values.front())) {
          rec.year = *y;
          has_year = true;
        }
      }
    } else if (field.tag == "AU") {
      for (const auto& v : field.values) {
        std::string t = trim(v);
        if (!t.empty()) rec.authors.push_back(parse_author(t));
      }
    } else if (field.tag == "TI") {
      for (const auto& v : field.values) title_parts.push_back(trim(v));
    } else if (field.tag == "SO") {
      if (!field.values.empty()) rec.journal = trim(field.values.front());
    } else if (field.tag == "SC") {
      for (const auto& v : field.values)
        for (const auto& cat : split(v, ';')) {
          std::string c = trim(cat);
          if (!c.empty()) rec.subject_categories.push_back(c);
        }
    } else if (field.tag == "C1") {
      for (const auto& v : field.values)
        if (auto code = countries.code_for_address(v)) rec.addresses.push_back(*code);
    } else if (field.tag == "CR") {
      for (const auto& v : field.values) {
        std::string t = trim(v);
        if (t.empty()) continue;
        CitedRef ref;
        ref.raw = t;
        rec.cited_refs.push_back(std::move(ref));
      }
    }
    // PT, AF, and unknown tags are accepted and ignored.
  }
  rec.title = join(title_parts, " ");
  fields.clear();
  if (rec.record_id.empty() || !has_year) {
    out.errors.push_back({first_line, std::string("record rejected: missing ") +
                                          (rec.record_id.empty() ? "UT" : "PY")});
    return;
  }
  out.records.push_back(std::move(rec));
}

}  // namespace

WosParseResult parse_wos_flatfile(std::istream& in, const CountryNames& countries) {
  WosParseResult result;
  std::vector<RawField> fields;
  std::string line;
  std::size_t lineno = 0;
  std::size_t record_first_line = 0;
  bool in_record = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line.rfind("   ", 0) == 0) {  // continuation line
      if (!fields.empty()) fields.back().values.push_back(line.substr(3));
      continue;
    }
    std::string tag = line.size() >= 2 ? line.substr(0, 2) : line;
    std::string value = line.size() > 3 ? line.substr(3) : "";
    if (tag == "FN" || tag == "VR" || tag == "EF") continue;  // file header/footer
    if (tag == "ER") {
      finish_record(fields, record_first_line, countries, result);
      in_record = false;
      continue;
    }
    if (!in_record) {
      in_record = true;
      record_first_line = lineno;
    }
    fields.push_back({tag, {value}});
  }
  if (in_record) {
    // Unterminated trailing block; treat it like a record and validate.
    finish_record(fields, record_first_line, countries, result);
  }
  return result;
}

}  // namespace pubnet
