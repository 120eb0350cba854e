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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "valgen/core.hpp"
#include "valgen/ontology.hpp"

namespace valgen {

struct FrameKey {
  Language language = Language::de;
  std::string lemma;
};

struct CooccurrenceEntry {
  int rank = 0;
  std::string filler;   // as listed, e.g. "Text die Lied"
  std::string lexeme;   // the slot filler, e.g. "Lied"
  long long count = 0;
  double per_million = 0.0;                     // recomputed
  std::optional<double> published_per_million;  // as listed, if any
};

enum class LexemeToken { first, last };

struct CooccurrenceTable {
  std::string name;
  FrameKey frame;
  long long corpus_size_tokens = 0;
  std::optional<long long> pattern_count;  // total hits of the pattern, if declared
  LexemeToken lexeme_token = LexemeToken::last;
  std::vector<CooccurrenceEntry> entries;  // rank order

  long long total_count() const;
  // Pattern frequency: the declared total if present, else the sum of rows.
  double pattern_per_million() const;
  const CooccurrenceEntry* find_lexeme(std::string_view lexeme) const;
};

double per_million(long long count, long long corpus_size);

CooccurrenceTable parse_frequency_table(std::istream& in, const std::string& name, FrameKey frame = {});
CooccurrenceTable ingest_frequency_table(const std::filesystem::path& path, FrameKey frame = {});

enum class Verdict { valency_required, not_valency, excluded };
std::string_view to_string(Verdict v);

struct RoleAnnotation {
  std::string filler;
  Verdict verdict = Verdict::not_valency;
  std::optional<SlotRef> slot;
  std::string note;
};

std::vector<RoleAnnotation> parse_annotations(const json& doc, const std::string& where = "annotations");
std::vector<RoleAnnotation> load_annotations(const std::filesystem::path& path);

struct LexicalPrototype {
  std::string lexeme;
  std::string filler;
  int rank = 0;
  long long count = 0;
  double per_million = 0.0;
  SlotRef slot;
  std::vector<ClassPath> classes;
};

struct FilterOptions {
  bool strict = false;
  int top_k = 20;  // strict mode: rows ranked within top_k need an annotation
};

std::vector<LexicalPrototype> filter_candidates(const CooccurrenceTable& table,
                                                const std::vector<RoleAnnotation>& annotations,
                                                const SlotRef& slot, const Ontology* onto = nullptr,
                                                FilterOptions options = {});

struct Thresholds {
  double freq_min = 0.05;  // pattern hits per million tokens
  int diversity_min = 5;
  int rank_window = 20;
  int class_members_min = 3;
  long long class_freq_min = 1000;
  double lexeme_pm_min = 0.01;  // contrast: per-million floor for a single filler
};

enum class PatternGrade { TypeI_prototypical, TypeII_representative_rare, Excluded };
std::string_view to_string(PatternGrade g);
int grade_rank(PatternGrade g);  // 0 best

struct GradeEvidence {
  double pattern_per_million = 0.0;
  int distinct_candidates = 0;
  double valency_share = 0.0;
};

struct PrototypicalityGrade {
  PatternGrade grade = PatternGrade::Excluded;
  GradeEvidence evidence;
};

PrototypicalityGrade grade_pattern(const CooccurrenceTable& table, const std::vector<LexicalPrototype>& candidates,
                                   const Thresholds& config = {});

enum class ClassGrade { ManyRepresentatives_Frequent, FewRepresentatives_Frequent, Excluded };
std::string_view to_string(ClassGrade g);

struct ClassPrototypicality {
  ClassPath cls;
  ClassGrade grade = ClassGrade::Excluded;
  int representative_count = 0;
  long long summed_count = 0;
};

ClassPrototypicality grade_class(const ClassPath& cls, const std::vector<LexicalPrototype>& candidates,
                                 PatternGrade pattern_grade, const Thresholds& config = {});

enum class ContrastVerdict { prototypical_in_A_only, prototypical_in_B_only, both, neither };
std::string_view to_string(ContrastVerdict v);

struct ContrastSide {
  std::string table;
  std::optional<int> rank;
  std::optional<long long> count;
  std::optional<double> per_million;
  bool prototypical = false;
};

struct ContrastReport {
  std::string lexeme;
  ContrastSide a;
  ContrastSide b;
  ContrastVerdict verdict = ContrastVerdict::neither;
};

// A filler is prototypical for a frame when it ranks within rank_window or
// reaches lexeme_pm_min per million.
bool filler_prototypical(const CooccurrenceEntry& e, const Thresholds& config);

ContrastReport contrast_report(const std::string& lexeme, const CooccurrenceTable& a, const CooccurrenceTable& b,
                               const Thresholds& config = {});

json to_json(const PrototypicalityGrade& g);
json to_json(const ClassPrototypicality& c);
json to_json(const ContrastReport& r);

}  // namespace valgen
