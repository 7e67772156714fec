#include "divehmm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "divehmm/errors.hpp"

namespace divehmm {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& text, const std::string& where) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": cannot parse number '" + text + "'");
  }
}

long long parse_int(const std::string& text, const std::string& where) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": cannot parse integer '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

CelestialLabel parse_celestial(const std::string& text, const std::string& where) {
  if (text == "day") return CelestialLabel::kDaytime;
  if (text == "dark") return CelestialLabel::kDarkNight;
  if (text == "moonlit") return CelestialLabel::kMoonlitNight;
  throw ValidationError(where + ": unknown celestial label '" + text + "'");
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str());
}

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
  KeyValueConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (config.entries_.count(key)) {
      throw ParseError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    config.entries_[key] = value;
  }
  return config;
}

bool KeyValueConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValueConfig::get_string(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ParseError("config: missing key '" + key + "'");
  return it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
  return parse_double(get_string(key), "config key '" + key + "'");
}

long long KeyValueConfig::get_int(const std::string& key) const {
  return parse_int(get_string(key), "config key '" + key + "'");
}

std::vector<double> KeyValueConfig::get_double_list(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<double> values;
  for (const auto& item : split(raw, ',')) {
    values.push_back(parse_double(trim(item), "config key '" + key + "'"));
  }
  return values;
}

std::string KeyValueConfig::get_string_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double KeyValueConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long KeyValueConfig::get_int_or(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

void KeyValueConfig::require_known_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : entries_) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("config: unknown key '" + key + "'");
    }
  }
}

GridSpec GridSpec::defaults() {
  GridSpec spec;
  spec.breakpoints_m = {0,   10,  20,  30,   50,   100,  200, 300,
                        400, 600, 800, 1000, 1200, 1600, 2000};
  return spec;
}

GridSpec GridSpec::from_config(const KeyValueConfig& config) {
  GridSpec spec = defaults();
  if (config.has("breakpoints_m")) spec.breakpoints_m = config.get_double_list("breakpoints_m");
  spec.delta_s = config.get_double_or("delta_s", spec.delta_s);
  spec.deep_threshold_m = config.get_double_or("deep_threshold_m", spec.deep_threshold_m);
  spec.shallow_threshold_m = config.get_double_or("shallow_threshold_m", spec.shallow_threshold_m);
  if (!(spec.delta_s > 0.0)) throw ValidationError("delta_s must be positive");
  return spec;
}

DepthGrid GridSpec::make_grid() const { return DepthGrid(breakpoints_m); }

Dataset load_dataset_csv(const std::string& path, const GridSpec& spec) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open data file '" + path + "'");
  return load_dataset_csv_stream(in, spec, path);
}

Dataset load_dataset_csv_stream(std::istream& in, const GridSpec& spec, const std::string& origin) {
  Dataset dataset{spec.make_grid(), {}, spec.deep_threshold_m, spec.shallow_threshold_m};

  std::string line;
  if (!std::getline(in, line)) throw ParseError(origin + ": empty file");
  if (trim(line) != "tag_id,time_s,depth_bin,celestial,exposed") {
    throw ParseError(origin + ": bad header, expected tag_id,time_s,depth_bin,celestial,exposed");
  }

  // Group rows by tag in first-appearance order, then sort each tag by time.
  std::vector<TagRecord> tags;
  std::map<std::string, size_t> tag_slot;
  std::vector<std::vector<int>> exposed_flags;

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::string where = origin + " row " + std::to_string(row);
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw ParseError(where + ": expected 5 fields");

    const std::string tag_id = trim(fields[0]);
    if (tag_id.empty()) throw ParseError(where + ": empty tag_id");

    Observation obs;
    obs.time_s = parse_double(trim(fields[1]), where);
    const long long bin = parse_int(trim(fields[2]), where);
    if (bin < 1 || bin > dataset.grid.num_bins()) {
      throw ValidationError(where + ": depth_bin " + std::to_string(bin) + " outside 1.." +
                            std::to_string(dataset.grid.num_bins()));
    }
    obs.bin = static_cast<int>(bin);
    obs.celestial = parse_celestial(trim(fields[3]), where);
    const long long exposed = parse_int(trim(fields[4]), where);
    if (exposed != 0 && exposed != 1) throw ValidationError(where + ": exposed must be 0 or 1");

    auto [it, inserted] = tag_slot.try_emplace(tag_id, tags.size());
    if (inserted) {
      tags.push_back(TagRecord{tag_id, spec.delta_s, {}, std::nullopt});
      exposed_flags.emplace_back();
    }
    tags[it->second].observations.push_back(obs);
    exposed_flags[it->second].push_back(static_cast<int>(exposed));
  }

  for (size_t t = 0; t < tags.size(); ++t) {
    auto& tag = tags[t];
    auto& flags = exposed_flags[t];
    std::vector<size_t> order(tag.observations.size());
    for (size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return tag.observations[a].time_s < tag.observations[b].time_s;
    });
    std::vector<Observation> sorted_obs(order.size());
    std::vector<int> sorted_flags(order.size());
    for (size_t j = 0; j < order.size(); ++j) {
      sorted_obs[j] = tag.observations[order[j]];
      sorted_flags[j] = flags[order[j]];
    }
    tag.observations = std::move(sorted_obs);

    int transitions = 0;
    for (size_t j = 0; j < sorted_flags.size(); ++j) {
      if (sorted_flags[j] == 1 && (j == 0 || sorted_flags[j - 1] == 0)) {
        ++transitions;
        if (!tag.exposure_index) tag.exposure_index = static_cast<int>(j);
      }
      if (j > 0 && sorted_flags[j] == 0 && sorted_flags[j - 1] == 1) {
        throw ValidationError(origin + ": tag " + tag.tag_id + " clears the exposed flag");
      }
    }
    if (transitions > 1) {
      throw ValidationError(origin + ": tag " + tag.tag_id + " has multiple exposure onsets");
    }
  }

  dataset.tags = std::move(tags);
  dataset.validate();
  return dataset;
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
  out << "tag_id,time_s,depth_bin,celestial,exposed\n";
  char buffer[64];
  for (const auto& tag : dataset.tags) {
    for (int j = 0; j < tag.size(); ++j) {
      const auto& obs = tag.observations[static_cast<size_t>(j)];
      const int exposed = tag.exposure_index && j >= *tag.exposure_index ? 1 : 0;
      std::snprintf(buffer, sizeof(buffer), "%.10g", obs.time_s);
      out << tag.tag_id << ',' << buffer << ',' << obs.bin << ',' << to_string(obs.celestial)
          << ',' << exposed << '\n';
    }
  }
}

void write_dataset_csv(const std::string& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_dataset_csv(out, dataset);
}

}  // namespace divehmm
