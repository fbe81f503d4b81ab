#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pubnet/biblio.hpp"

namespace pubnet {

// Maps trailing address tokens ("USA", "Peoples R China", ...) to ISO-3166
// alpha-2 codes. Unknown countries are skipped by the parser.
class CountryNames {
 public:
  static const CountryNames& builtin();
  static CountryNames load(std::istream& in);  // csv: name,code

  std::optional<std::string> code_for_address(const std::string& address_line) const;
  void add(const std::string& name, const std::string& code);

 private:
  std::map<std::string, std::string> name_to_code_;
};

struct WosParseResult {
  std::vector<BiblioRecord> records;
  std::vector<ParseIssue> errors;
};

// Tagged flat file: two-letter field tags in column 1-2, continuation lines
// indented three spaces, records terminated by ER. Records missing UT or PY
// are rejected and reported with the line number of their first line.
WosParseResult parse_wos_flatfile(std::istream& in,
                                  const CountryNames& countries = CountryNames::builtin());

}  // namespace pubnet
