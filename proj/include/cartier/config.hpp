#ifndef CARTIER_CONFIG_HPP
#define CARTIER_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cartier {

struct OpSpec {
  std::uint32_t e = 1;
  std::string f;
};

// One job description. Polynomials stay as strings here; they are parsed
// against the declared ring when the job is built.
struct JobConfig {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> quotient;
  std::optional<std::vector<std::string>> radical;
  std::optional<std::vector<std::vector<std::string>>> minimal_primes;
  bool domain = false;

  std::vector<OpSpec> generators;

  std::optional<std::vector<std::string>> pair_a;
  std::optional<std::string> pair_t;

  std::string task;
  std::optional<std::string> T;
  std::uint32_t resolution = 2;
  std::uint32_t e_cap = 8;
  std::size_t word_limit = 4096;
  std::optional<std::string> test_element;
  std::optional<std::string> oracle_f;
  std::uint32_t oracle_e = 1;
  std::int64_t gauge_cap = 8;
};

// Strict key-value tree subset (tables, arrays, strings, integers,
// booleans, inline tables). No floats anywhere: rationals are strings
// "num/den".
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

}  // namespace cartier

#endif
