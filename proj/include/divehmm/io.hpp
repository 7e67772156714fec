#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "divehmm/records.hpp"

namespace divehmm {

// Flat `key = value` configuration text; '#' starts a comment, blank lines
// are ignored.  Values keep their raw text until a typed getter is called.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  long long get_int(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double_or(const std::string& key, double fallback) const;
  long long get_int_or(const std::string& key, long long fallback) const;

  // Throws ParseError if the file contains a key outside `allowed`.
  void require_known_keys(const std::vector<std::string>& allowed) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

// Grid geometry plus sampling/threshold settings shared by every command.
struct GridSpec {
  std::vector<double> breakpoints_m;
  double delta_s = 300.0;
  double deep_threshold_m = 800.0;
  double shallow_threshold_m = 200.0;

  static GridSpec from_config(const KeyValueConfig& config);
  static GridSpec defaults();

  DepthGrid make_grid() const;
};

// Reads the dataset CSV (header tag_id,time_s,depth_bin,celestial,exposed).
// Rows may interleave tags; each tag is grouped and time-sorted.  Throws
// ParseError on malformed rows and ValidationError on invariant violations,
// both naming the offending row.
Dataset load_dataset_csv(const std::string& path, const GridSpec& spec);
Dataset load_dataset_csv_stream(std::istream& in, const GridSpec& spec, const std::string& origin);

void write_dataset_csv(std::ostream& out, const Dataset& dataset);
void write_dataset_csv(const std::string& path, const Dataset& dataset);

}  // namespace divehmm
