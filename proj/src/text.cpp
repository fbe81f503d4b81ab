#include "pubnet/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstring>

namespace pubnet {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view delim) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(delim);
    out.append(parts[i]);
  }
  return out;
}

namespace {

// Latin-1 supplement / Latin extended-A letters that show up in author names,
// keyed by Unicode code point, folded to ASCII.
const char* fold_codepoint(unsigned cp) {
  switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
    case 0x100: case 0x101: case 0x102: case 0x103: case 0x104: case 0x105:
      return "A";
    case 0xC6: case 0xE6: return "AE";
    case 0xC7: case 0xE7: case 0x106: case 0x107: case 0x10C: case 0x10D:
      return "C";
    case 0x10E: case 0x10F: case 0x110: case 0x111: case 0xD0: case 0xF0:
      return "D";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB:
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
    case 0x112: case 0x113: case 0x118: case 0x119: case 0x11A: case 0x11B:
      return "E";
    case 0x11E: case 0x11F: return "G";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF:
    case 0xEC: case 0xED: case 0xEE: case 0xEF: case 0x130: case 0x131:
      return "I";
    case 0x141: case 0x142: return "L";
    case 0xD1: case 0xF1: case 0x143: case 0x144: case 0x147: case 0x148:
      return "N";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
    case 0x150: case 0x151:
      return "O";
    case 0x154: case 0x155: case 0x158: case 0x159: return "R";
    case 0x15A: case 0x15B: case 0x15E: case 0x15F: case 0x160: case 0x161:
      return "S";
    case 0xDF: return "SS";
    case 0x162: case 0x163: case 0x164: case 0x165: return "T";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC:
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: case 0x16E: case 0x16F:
    case 0x170: case 0x171:
      return "U";
    case 0xDD: case 0xFD: case 0xFF: case 0x178: return "Y";
    case 0x179: case 0x17A: case 0x17B: case 0x17C: case 0x17D: case 0x17E:
      return "Z";
    default: return nullptr;
  }
}

}  // namespace

std::string upper_ascii_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(std::toupper(c)));
      ++i;
      continue;
    }
    // Decode a 2-byte UTF-8 sequence; anything longer is dropped.
    if ((c & 0xE0) == 0xC0 && i + 1 < s.size()) {
      unsigned cp = ((c & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      if (const char* folded = fold_codepoint(cp)) out.append(folded);
      i += 2;
      continue;
    }
    ++i;
  }
  return out;
}

std::string sanitize_text_field(std::string_view s) {
  std::string out(trim(s));
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string sanitize_list_item(std::string_view s) {
  std::string out = sanitize_text_field(s);
  for (char& c : out) {
    if (c == ';') c = ',';
  }
  return out;
}

std::string sanitize_name_part(std::string_view s) {
  std::string out = sanitize_list_item(s);
  for (char& c : out) {
    if (c == '/') c = ' ';
  }
  return trim(out);
}

std::optional<int> parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string(buf);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step keeps trial streams decorrelated even for adjacent seeds.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

std::string format_thousands(long long value) {
  char digits[32];
  std::snprintf(digits, sizeof(digits), "%lld", value < 0 ? -value : value);
  std::string body(digits);
  std::string out;
  int lead = static_cast<int>(body.size()) % 3;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i != 0 && static_cast<int>(i) % 3 == lead % 3) out.push_back(',');
    out.push_back(body[i]);
  }
  if (value < 0) out.insert(out.begin(), '-');
  return out;
}

std::string format_pct1(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", fraction * 100.0);
  return std::string(buf);
}

std::string format_double(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

}  // namespace pubnet
