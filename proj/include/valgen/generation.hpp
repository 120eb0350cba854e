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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgen/bundle.hpp"
#include "valgen/embeddings.hpp"
#include "valgen/morphology.hpp"

namespace valgen {

struct StructureInfo {
  std::string id;
  std::string label;
  Arity arity = Arity::mono;
  PatternGrade grade = PatternGrade::Excluded;
  std::vector<SlotRef> slots;
};

// Offered patterns: Excluded omitted, TypeI before TypeII, then by id.
std::vector<StructureInfo> list_structures(const Bundle& b, const std::string& lemma);

struct SemanticPackage {
  SlotRef slot;
  ClassPath cls;
  std::string label;
  std::string preview;
  NumberPolicy number = NumberPolicy::sg;
  ClassPrototypicality grade;
  std::vector<std::string> members;
  std::vector<long long> frequencies;  // parallel to members
};

// Resolves "a"/"b" (argument slots in surface order) or "ArgN.M".
SlotRef resolve_slot(const PatternAnalysis& pa, const std::string& key);

// Non-Excluded packages of an offered pattern's slot, with previews.
std::vector<SemanticPackage> list_semantic_packages(const Bundle& b, const std::string& lemma,
                                                    const std::string& pattern_id, const std::string& slot_key);

struct GenerationRequest {
  Language language = Language::de;
  std::string lemma;
  std::string pattern_id;
  // slot key ("a", "b", "ArgN.M") -> package references (class path, alias or label), in request order
  std::vector<std::pair<std::string, std::vector<std::string>>> packages;
  int limit = 20;
  std::uint64_t seed = 0;
  double threshold = kDefaultThreshold;
  bool include_adjectives = false;
};

struct SlotFill {
  SlotRef slot;
  std::string lexeme;
  Number number = Number::sg;
  std::string package;  // class path
  long long frequency = 0;
};

struct GeneratedPhrase {
  std::string text;
  std::string pattern_id;
  std::vector<SlotFill> fills;             // surface order
  std::map<int, std::string> adjectives;   // pattern slot index -> adjective id
  Binding binding;
  Realization realization;
  std::optional<double> similarity;
  std::optional<Decision> decision;        // biargumental only
};

struct GenerationStats {
  int generated = 0;  // realized candidates
  int filtered = 0;   // rejected by the compatibility filter
  int truncated = 0;  // dropped by the limit
};

struct GenerationResult {
  std::vector<GeneratedPhrase> phrases;
  GenerationStats stats;
};

// Candidate fillers of one slot after package resolution, in engine order.
struct SlotCandidate {
  std::string lexeme;
  Number number = Number::sg;
  std::string package;
  long long frequency = 0;
};

struct ResolvedRequest {
  const FrameAnalysis* frame = nullptr;
  const PatternAnalysis* pattern = nullptr;
  std::vector<SlotRef> slots;                          // surface order
  std::vector<std::vector<const PackageInfo*>> packages;  // per slot
  std::vector<std::vector<SlotCandidate>> candidates;     // per slot, (frequency desc, lexeme asc, sg first)
};

// Validates the request and expands the selected packages; throws
// UnknownPattern, UnknownSlot, UnknownPackage, ArityMismatch, EmptyPackageSelection.
ResolvedRequest resolve_request(const Bundle& b, const GenerationRequest& req);

// Adjective choice for the optional adjective slots, drawn from `seed`.
std::map<int, std::string> choose_adjectives(const Bundle& b, const ResolvedRequest& r,
                                             const std::vector<SlotCandidate>& fills, std::uint64_t seed);

GenerationResult generate_mono(const Bundle& b, const GenerationRequest& req);
GenerationResult generate_bi(const Bundle& b, const GenerationRequest& req);
GenerationResult generate(const Bundle& b, const GenerationRequest& req);

enum class ExportFormat { json, csv };
std::optional<ExportFormat> parse_export_format(std::string_view s);

inline constexpr std::string_view kCsvHeader = "text,pattern_id,slot_fillers,similarity";

json phrase_to_json(const GeneratedPhrase& p);
std::string export_phrases(const std::vector<GeneratedPhrase>& phrases, ExportFormat format);

}  // namespace valgen
