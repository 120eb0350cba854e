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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valgen/core.hpp"

namespace valgen {

std::string inflect_noun(const LexicalEntry& entry, Case c, Number n);
std::string inflect_determiner(Definiteness d, Gender g, Case c, Number n, Language lang);
std::string inflect_adjective(const LexicalEntry& entry, Declension decl, Gender g, Case c, Number n);

// German adjective declension selected by the preceding article.
Declension declension_after(Definiteness d, Number n);

// Modifier + linking element + head with its first letter lowercased. The
// result inflects through the head's table and carries the head's gender.
LexicalEntry compose_compound(const LexicalEntry& modifier, const LexicalEntry& head);

struct Binding {
  std::string head;                          // head lexeme id
  std::map<SlotRef, std::string> fillers;    // argument slot -> lexeme id
  std::map<SlotRef, Number> numbers;         // argument slot -> number
  std::map<int, std::string> adjectives;     // pattern slot index -> adjective id
  Number head_number = Number::sg;           // unless a head-attached argument sets it
};

struct GroupFeatures {
  int noun_slot = -1;
  Gender gender = Gender::masc;
  Number number = Number::sg;
  Case gcase = Case::none;
  Definiteness definiteness = Definiteness::none;  // of the group's article
  bool zero_article = false;
};

struct TokenTrace {
  int slot = -1;
  SlotKind kind = SlotKind::head;
  int group = -1;
  std::string lexeme;     // entry id; "Mod+Head" for compounds; empty for closed-class and literals
  std::string key;        // form-table key or determiner feature tag
  std::string source;     // lexicon | compound | determiner | literal
  std::string form;       // before phonology
  std::string surface;    // after phonology; empty when merged into the previous token
  bool glued = false;     // no space before the next token
};

struct Realization {
  std::string text;
  std::vector<TokenTrace> tokens;
  std::vector<GroupFeatures> groups;
};

// Builds the surface tokens; throws MissingBinding, AgreementUnsatisfiable.
Realization realize_np(const RealizationPattern& pattern, const Binding& binding, const Lexicon& lexicon);

struct Recheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Re-analyses every emitted form against the tables and checks that each
// noun group admits one shared gender/number/case assignment, that every token
// has a known provenance and that the text is the phonology of the forms.
Recheck agreement_recheck(const RealizationPattern& pattern, const Realization& r, const Lexicon& lexicon);

// Elision (fr) and preposition-article contraction, right to left.
void apply_phonology(Language lang, std::vector<TokenTrace>& tokens);
std::string join_surface(const std::vector<TokenTrace>& tokens);

json to_json(const Realization& r);

}  // namespace valgen
