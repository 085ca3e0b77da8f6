#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prepsense {

/// Malformed or inconsistent input data (bad file contents, unknown ids, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or command usage.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace str {

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_ws(std::string_view s);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// ASCII-only case folding; multi-byte UTF-8 sequences pass through unchanged.
std::string lower_ascii(std::string_view s);
bool iequals_ascii(std::string_view a, std::string_view b);

bool parse_size(std::string_view s, std::size_t& out);
bool parse_u64(std::string_view s, std::uint64_t& out);
bool parse_double(std::string_view s, double& out);

}  // namespace str

namespace io {

/// Reads all lines of a text file; trailing '\r' is stripped. Throws DataError.
std::vector<std::string> read_lines(const std::string& path);

/// Writes content to a temporary file in the target directory, then renames it
/// into place, so the destination never holds a partial file.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace io

}  // namespace prepsense
