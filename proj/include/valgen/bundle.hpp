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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valgen/core.hpp"
#include "valgen/embeddings.hpp"
#include "valgen/ontology.hpp"
#include "valgen/prototyping.hpp"

namespace valgen {

enum class NumberPolicy { sg, pl, both };
std::string_view to_string(NumberPolicy p);
std::optional<NumberPolicy> parse_number_policy(std::string_view s);
std::vector<Number> numbers_of(NumberPolicy p);

struct PackageDecl {
  ClassPath cls;
  NumberPolicy number = NumberPolicy::sg;
  std::string label;
  std::vector<std::string> head_adjectives;
  std::vector<std::string> filler_adjectives;
};

// Links patterns and one argument slot to a frequency table and its annotations.
struct EvidenceSpec {
  std::vector<std::string> patterns;
  SlotRef slot;
  std::string table;        // relative to the data directory
  std::string annotations;  // relative to the data directory
  std::optional<std::vector<PackageDecl>> packages;  // absent: induced from candidates
  NumberPolicy number = NumberPolicy::sg;            // for induced packages
};

struct FrameProfile {
  std::string lemma;
  std::vector<std::string> head_adjectives;
  std::vector<std::string> filler_adjectives;
  std::map<std::string, ClassPath> aliases;
  std::map<ClassPath, std::set<std::string>> exclude;
  std::vector<EvidenceSpec> evidence;
};

struct PackageInfo {
  ClassPath cls;
  std::string label;
  NumberPolicy number = NumberPolicy::sg;
  ClassPrototypicality grade;
  std::vector<std::string> members;  // (frequency desc, lexeme asc)
  std::vector<std::string> head_adjectives;
  std::vector<std::string> filler_adjectives;
};

struct SlotEvidence {
  const EvidenceSpec* spec = nullptr;
  const CooccurrenceTable* table = nullptr;
  std::vector<LexicalPrototype> candidates;
  PrototypicalityGrade grade;
  std::map<std::string, long long> frequency;  // summed valency_required counts per lexeme
  std::vector<PackageInfo> packages;           // every class, Excluded included, in offer order

  long long frequency_of(const std::string& lexeme) const;
};

struct PatternAnalysis {
  const RealizationPattern* pattern = nullptr;
  PatternGrade grade = PatternGrade::Excluded;
  std::vector<SlotRef> slots;              // bound slots in surface order
  std::map<SlotRef, size_t> evidence;      // slot -> index into FrameAnalysis::evidence
};

struct FrameAnalysis {
  const ValencyFrame* frame = nullptr;
  const FrameProfile* profile = nullptr;
  std::vector<SlotEvidence> evidence;
  std::vector<PatternAnalysis> patterns;   // lexicon order

  const PatternAnalysis* find_pattern(std::string_view id) const;
};

// Analyses point into the bundle's own containers: move-only.
struct Bundle {
  Bundle() = default;
  Bundle(Bundle&&) = default;
  Bundle& operator=(Bundle&&) = default;
  Bundle(const Bundle&) = delete;
  Bundle& operator=(const Bundle&) = delete;

  Language language = Language::de;
  Lexicon lexicon;
  Ontology ontology;
  std::map<std::string, FrameProfile> profiles;
  std::map<std::string, CooccurrenceTable> tables;
  std::map<std::string, std::vector<RoleAnnotation>> annotations;
  std::optional<VectorStore> vectors;
  std::map<std::string, FrameAnalysis> analyses;  // by lemma

  const ValencyFrame& frame(std::string_view lemma) const;        // UnknownFrame
  const FrameAnalysis& analysis(std::string_view lemma) const;    // UnknownFrame
};

FrameProfile parse_profile(const json& j, const std::string& where);

// Loads lexicon, ontology, profiles, tables, annotations and vectors for one
// language and grades every frame.
Bundle load_bundle(const std::filesystem::path& dir, Language lang, const Thresholds& config = {});

class DataStore {
 public:
  // Loads every language whose lexicon file exists; at least one is required.
  static DataStore load(const std::filesystem::path& dir, const Thresholds& config = {});

  const Bundle& bundle(Language lang) const;  // UnknownLanguage
  const Bundle& bundle(std::string_view code) const;
  std::vector<Language> languages() const;
  const Thresholds& thresholds() const { return thresholds_; }
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
  Thresholds thresholds_;
  std::map<Language, Bundle> bundles_;
};

std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag);

}  // namespace valgen
