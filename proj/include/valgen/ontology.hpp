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

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valgen/core.hpp"

namespace valgen {

// Lowercases ASCII and the Latin-1 supplement; other code points pass through.
std::string lowercase_utf8(std::string_view s);
// Lowercases / uppercases the first code point only.
std::string lower_first(std::string_view s);
std::string upper_first(std::string_view s);

struct ClassPath {
  std::vector<std::string> segments;

  ClassPath() = default;
  explicit ClassPath(std::vector<std::string> segs);

  // "belebt.menschlich.körperteil"; labels are lowercased.
  static ClassPath parse(std::string_view dotted);
  std::string str() const;
  size_t depth() const { return segments.size(); }
  bool empty() const { return segments.empty(); }
  bool is_prefix_of(const ClassPath& other) const;
  std::optional<ClassPath> parent() const;

  auto operator<=>(const ClassPath&) const = default;
};

struct OntologyNode {
  ClassPath path;
  std::optional<ClassPath> parent;
  std::vector<std::string> members;  // sorted, unique
  json tags = json::object();
};

class Ontology {
 public:
  static Ontology from_json(const json& doc);

  std::optional<Language> language() const { return language_; }
  const std::map<ClassPath, OntologyNode>& nodes() const { return nodes_; }
  const OntologyNode* find(const ClassPath& p) const;
  bool contains(const ClassPath& p) const { return find(p) != nullptr; }
  std::vector<ClassPath> roots() const;
  std::vector<ClassPath> children(const ClassPath& p) const;
  size_t member_count() const;
  // Every lexeme listed under some node, sorted.
  std::vector<std::string> lexemes() const;
  // Paths listing the lexeme, sorted.
  const std::vector<ClassPath>& paths_of(const std::string& lexeme) const;

 private:
  std::optional<Language> language_;
  std::map<ClassPath, OntologyNode> nodes_;
  std::map<std::string, std::vector<ClassPath>> by_member_;
};

Ontology load_ontology(const std::filesystem::path& path);

bool subsumes(const ClassPath& ancestor, const ClassPath& descendant, const Ontology& onto);
std::vector<ClassPath> classify_lexeme(const std::string& lexeme, const Ontology& onto);

// Members of the node and all descendants. With `frequency`, ordered by
// (frequency desc, lexeme asc); otherwise lexeme asc.
std::vector<std::string> expand_class(const ClassPath& query, const Ontology& onto,
                                      const std::map<std::string, long long>* frequency = nullptr);

}  // namespace valgen
