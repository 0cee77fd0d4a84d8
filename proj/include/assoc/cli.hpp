#pragma once

#include "assoc/assembler.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace assoc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

inline constexpr int kMaxA4Degree = 7;
inline constexpr int kMaxA3Degree = 10;

enum class Format { json, table };

struct Config {
  std::string command;
  int degree = 0;  // 0: command default
  int strands = 0;
  int a4_truncation = 0;  // 0: derived from the degree
  BuildMode mode = BuildMode::full;
  std::string in;
  std::string out;
  Format format = Format::table;
  int from = 0;
  int to = 0;
  std::size_t max_terms = 20;
  bool lemma = false;
  bool dims = false;
  bool identities = false;
  bool welldef = false;
  bool projections = false;
  bool theorem = false;
};

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "A..B".
std::pair<int, int> parse_degree_range(const std::string& text);
/// Fills command defaults and enforces the degree caps. Throws ConfigError.
Config validate(Config config);

int run_build(const Config& config, std::ostream& out, std::ostream& err);
int run_verify(const Config& config, std::ostream& out, std::ostream& err);
int run_dims(const Config& config, std::ostream& out, std::ostream& err);
int run_suites(const Config& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses, validates, dispatches and maps
/// exceptions to the documented exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Coefficient table: at most `max_terms` terms per degree plus exact counts.
void print_series_table(const Series& s, std::size_t max_terms, std::ostream& out);

}  // namespace assoc::cli
