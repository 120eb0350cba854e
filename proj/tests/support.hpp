// Copyright 2026 The valgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "valgen/bundle.hpp"

namespace valgen::testing {

inline std::filesystem::path data_dir() { return VALGEN_TEST_DATA_DIR; }
inline std::filesystem::path source_dir() { return VALGEN_TEST_SOURCE_DIR; }

// Loaded once per test binary.
inline const DataStore& store() {
  static const DataStore s = DataStore::load(data_dir());
  return s;
}
inline const Bundle& de() { return store().bundle(Language::de); }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The source article the fixtures transcribe.
inline const std::string& reference_text() {
  static const std::string text = slurp(source_dir() / "paper.md");
  return text;
}

struct ReferenceRow {
  int rank;
  std::string filler;
  long long count;
  double per_million;
};

// The TEXT + genitive frequency list as printed in the reference text.
inline std::vector<ReferenceRow> reference_genitive_list() {
  std::istringstream in(reference_text());
  static const std::regex row(R"(^(\d+)\.\s*(Text die [^\t]+)\t(\d+)\t([0-9.]+)\s*$)");
  std::vector<ReferenceRow> out;
  std::string line;
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_match(line, m, row))
      out.push_back({std::stoi(m[1]), m[2], std::stoll(m[3]), std::stod(m[4])});
  return out;
}

// Strict RFC-4180 reader: CRLF records, quoted fields with doubled quotes.
// Throws std::runtime_error on anything else.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  size_t i = 0;
  bool at_field_start = true;
  auto end_row = [&] {
    row.push_back(field);
    field.clear();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < s.size()) {
    char c = s[i];
    if (at_field_start && c == '"') {
      ++i;
      for (;;) {
        if (i >= s.size()) throw std::runtime_error("unterminated quote");
        if (s[i] == '"') {
          if (i + 1 < s.size() && s[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.push_back(s[i++]);
      }
      if (i < s.size() && s[i] != ',' && s[i] != '\r') throw std::runtime_error("junk after quoted field");
      at_field_start = false;
      continue;
    }
    if (c == ',') {
      row.push_back(field);
      field.clear();
      at_field_start = true;
      ++i;
    } else if (c == '\r') {
      if (i + 1 >= s.size() || s[i + 1] != '\n') throw std::runtime_error("bare CR");
      end_row();
      at_field_start = true;
      i += 2;
    } else if (c == '\n' || c == '"') {
      throw std::runtime_error("bare LF or quote in unquoted field");
    } else {
      field.push_back(c);
      at_field_start = false;
      ++i;
    }
  }
  if (!row.empty() || !field.empty()) throw std::runtime_error("missing final CRLF");
  return rows;
}

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }
  template <typename T>
  std::vector<T> sample(std::vector<T> v, size_t n) {
    std::shuffle(v.begin(), v.end(), rng_);
    if (v.size() > n) v.resize(n);
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace valgen::testing
