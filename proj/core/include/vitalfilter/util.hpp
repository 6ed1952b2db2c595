#ifndef VITALFILTER_UTIL_HPP
#define VITALFILTER_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vitalfilter {

// 64-bit FNV-1a. Used for feature schema fingerprints and manifest file
// hashes; stable across platforms.
std::uint64_t fnv1a(std::string_view bytes);
std::uint64_t fnv1a_file(const std::string& path);
std::string to_hex(std::uint64_t value);

// Shortest round-trip decimal form of a double (std::to_chars). Integral
// values print without a trailing ".0" so TSV columns stay compact.
std::string format_double(double value);
double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace vitalfilter

#endif  // VITALFILTER_UTIL_HPP
