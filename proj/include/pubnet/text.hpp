#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pubnet {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
std::string join(const std::vector<std::string>& parts, std::string_view delim);

// Uppercase ASCII folding: maps common accented Latin letters to their ASCII
// base, uppercases a-z, drops other non-ASCII bytes.
std::string upper_ascii_fold(std::string_view s);

// Replaces control characters and canonical-format delimiters so a field can
// be stored on one line of the canonical corpus form. Idempotent.
std::string sanitize_text_field(std::string_view s);
std::string sanitize_list_item(std::string_view s);
std::string sanitize_name_part(std::string_view s);

std::optional<int> parse_int(std::string_view s);

// 64-bit FNV-1a, used for workspace manifest hashes.
std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

// Uniform double in [0,1) from the top 53 bits of the generator output, so
// streams do not depend on the library's distribution implementation.
double uniform01(std::mt19937_64& rng);

// Derives an independent generator for a trial index from a base seed.
std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream);

std::string format_thousands(long long value);        // 6645 -> "6,645"
std::string format_pct1(double fraction);             // 0.72893 -> "72.9%"
std::string format_double(double value, int decimals);

}  // namespace pubnet
