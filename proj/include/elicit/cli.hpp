#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "elicit/common.hpp"
#include "elicit/distribution.hpp"
#include "elicit/domain.hpp"
#include "elicit/score.hpp"

namespace elicit::cli {

// Flat key/value run configuration. Values from a --config file are loaded
// first; command-line flags win. Serialization round-trips exactly.
class RunConfig {
 public:
  static RunConfig from_file(const std::string& path);
  static RunConfig from_text(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_str(const std::string& key) const;
  std::string get_str(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double def) const;
  int get_int(const std::string& key, int def) const;
  Vec get_vec(const std::string& key) const;  // comma-separated

  std::string serialize() const;
  bool operator==(const RunConfig& other) const { return kv_ == other.kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

Distribution parse_distribution(const std::string& spec);
std::vector<Distribution> parse_distribution_list(const std::string& spec);
FunctionalSpec parse_functional(const RunConfig& cfg);
ScoreSpec parse_score(const RunConfig& cfg);
Domain parse_domain(const RunConfig& cfg, const FunctionalSpec& functional);

// Exit codes: 0 success, 1 verification failure, 2 configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace elicit::cli
