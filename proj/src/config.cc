// Copyright 2026 The Robsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robsel/config.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "robsel/errors.h"

namespace robsel {
namespace {

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kNames{"greedy", "modified-greedy", "saturate",
                                               "eporss"};
  return kNames;
}

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t comma = value.find(',', start);
    const std::string part = Trim(value.substr(start, comma - start));
    if (!part.empty()) out.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T ParseInteger(const std::string& text, const std::string& key) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  }
  return value;
}

double ParseDouble(const std::string& text, const std::string& key) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(key + ": expected a number, got '" + text + "'");
}

bool ParseBool(const std::string& text, const std::string& key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

IntRange ParseRange(const std::string& text, const std::string& key) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = ParseInteger<int>(text, key);
    return {v, v};
  }
  IntRange r{ParseInteger<int>(Trim(text.substr(0, dots)), key),
             ParseInteger<int>(Trim(text.substr(dots + 2)), key)};
  if (r.lo > r.hi) throw ConfigError(key + ": empty range '" + text + "'");
  return r;
}

ExperimentMode ParseMode(const std::string& text) {
  if (text == "perturb-ic") return ExperimentMode::kPerturbIc;
  if (text == "multi-graph-general-ic") return ExperimentMode::kMultiGraphGeneralIc;
  if (text == "synthetic") return ExperimentMode::kSynthetic;
  throw ConfigError("mode: unknown mode '" + text + "'");
}

std::string Resolve(const std::string& path, const std::string& base_dir) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

// Synthetic function keys are f1, f2, ...
int FunctionIndex(const std::string& key) {
  if (key.size() < 2 || key[0] != 'f') return -1;
  int index = 0;
  const auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), index);
  if (ec != std::errc() || ptr != key.data() + key.size() || index < 1) return -1;
  return index;
}

}  // namespace

std::string ToString(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kPerturbIc:
      return "perturb-ic";
    case ExperimentMode::kMultiGraphGeneralIc:
      return "multi-graph-general-ic";
    case ExperimentMode::kSynthetic:
      return "synthetic";
  }
  return "unknown";
}

bool ExperimentConfig::HasAlgorithm(const std::string& name) const {
  return std::find(algorithms.begin(), algorithms.end(), name) != algorithms.end();
}

void ExperimentConfig::Validate() const {
  if (algorithms.empty()) throw ConfigError("algorithms: none selected");
  for (const std::string& a : algorithms) {
    const auto& known = KnownAlgorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw ConfigError("algorithms: unknown algorithm '" + a + "'");
    }
  }
  if (k.is_range() && m.is_range()) {
    throw ConfigError("k and m cannot both be ranges");
  }
  if (node_limit < 1) throw ConfigError("node-limit must be >= 1");
  if (k.lo < 1 || k.hi > node_limit) {
    throw ConfigError("k must lie within [1, node-limit=" + std::to_string(node_limit) +
                      "]");
  }
  if (r < 1) throw ConfigError("r must be >= 1");
  if (eporss_seeds < 1) throw ConfigError("eporss-seeds must be >= 1");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (eporss_iterations < -1) throw ConfigError("eporss-T must be auto or >= 0");
  if (!(perturb_lo >= 0.0 && perturb_lo <= perturb_hi)) {
    throw ConfigError("perturb-lo/perturb-hi must satisfy 0 <= lo <= hi");
  }
  try {
    saturate.Validate();
    general_ic.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  switch (mode) {
    case ExperimentMode::kPerturbIc:
      if (m.lo < 2) throw ConfigError("m must be >= 2 in perturb-ic mode");
      if (graph_paths.size() != 1) {
        throw ConfigError("perturb-ic mode takes exactly one graph");
      }
      break;
    case ExperimentMode::kMultiGraphGeneralIc:
      if (m.lo < 2) throw ConfigError("m must be >= 2 in multi-graph-general-ic mode");
      if (static_cast<int>(graph_paths.size()) < m.hi) {
        throw ConfigError("multi-graph-general-ic mode needs one graph per objective (m=" +
                          std::to_string(m.hi) + ", graphs=" +
                          std::to_string(graph_paths.size()) + ")");
      }
      break;
    case ExperimentMode::kSynthetic:
      if (synthetic_functions.empty()) {
        throw ConfigError("synthetic mode needs functions f1, f2, ...");
      }
      if (m.is_range() || m.lo != static_cast<int>(synthetic_functions.size())) {
        throw ConfigError("synthetic mode: m must equal the number of functions");
      }
      break;
  }
}

ExperimentConfig ParseConfig(std::istream& in, const std::string& base_dir) {
  ExperimentConfig config;
  std::map<int, std::string> functions;
  bool m_given = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = Trim(line);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = Trim(text.substr(0, eq));
    const std::string value = Trim(text.substr(eq + 1));
    config.entries.emplace_back(key, value);
    try {
      if (key == "mode") {
        config.mode = ParseMode(value);
      } else if (key == "graph" || key == "graphs") {
        config.graph_paths.clear();
        for (const std::string& p : SplitList(value)) {
          config.graph_paths.push_back(Resolve(p, base_dir));
        }
      } else if (key == "m") {
        config.m = ParseRange(value, key);
        m_given = true;
      } else if (key == "k") {
        config.k = ParseRange(value, key);
      } else if (key == "r") {
        config.r = ParseInteger<int>(value, key);
      } else if (key == "node-limit") {
        config.node_limit = ParseInteger<int>(value, key);
      } else if (key == "seed") {
        config.seed = ParseInteger<uint64_t>(value, key);
      } else if (key == "algorithms") {
        config.algorithms = value == "all" ? KnownAlgorithms() : SplitList(value);
      } else if (key == "eporss-T") {
        config.eporss_iterations = value == "auto" ? -1 : ParseInteger<int64_t>(value, key);
      } else if (key == "eporss-seeds") {
        config.eporss_seeds = ParseInteger<int>(value, key);
      } else if (key == "repetitions") {
        config.repetitions = ParseInteger<int>(value, key);
      } else if (key == "saturate-alpha") {
        config.saturate.alpha = ParseDouble(value, key);
      } else if (key == "saturate-epsilon") {
        config.saturate.epsilon = ParseDouble(value, key);
      } else if (key == "saturate-max-rounds") {
        config.saturate.max_rounds = ParseInteger<int>(value, key);
      } else if (key == "output-dir") {
        config.output_dir = Resolve(value, base_dir);
      } else if (key == "oracle-mode") {
        try {
          config.seed_policy = ParseSeedPolicy(value);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(key + ": " + e.what());
        }
      } else if (key == "perturb-lo") {
        config.perturb_lo = ParseDouble(value, key);
      } else if (key == "perturb-hi") {
        config.perturb_hi = ParseDouble(value, key);
      } else if (key == "general-ic-base") {
        config.general_ic.base = ParseDouble(value, key);
      } else if (key == "general-ic-increment") {
        config.general_ic.increment = ParseDouble(value, key);
      } else if (key == "general-ic-cap") {
        config.general_ic.cap = ParseDouble(value, key);
      } else if (key == "record-timing") {
        config.record_timing = ParseBool(value, key);
      } else if (key == "verify-tier") {
        if (value != "tiny" && value != "small") {
          throw ConfigError(key + ": expected tiny or small");
        }
        config.verify_tier = value;
      } else if (const int index = FunctionIndex(key); index > 0) {
        functions[index] = value;
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  int expected = 1;
  for (const auto& [index, spec] : functions) {
    if (index != expected++) {
      throw ConfigError("function keys must be numbered f1, f2, ... without gaps");
    }
    config.synthetic_functions.push_back(spec);
  }
  if (config.mode == ExperimentMode::kSynthetic && !m_given) {
    const int count = static_cast<int>(config.synthetic_functions.size());
    config.m = {count, count};
  }
  return config;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return ParseConfig(in, dir.empty() ? "." : dir);
}

}  // namespace robsel
