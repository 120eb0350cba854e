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

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace valgen {

using json = nlohmann::json;

enum class Language { de, es, fr };
enum class Gender { masc, fem, neut };
enum class Number { sg, pl };
enum class Case { none, nom, gen, dat, acc };
enum class Definiteness { definite, indefinite, none };
enum class Declension { weak, strong, mixed };
enum class Pos { noun, adjective };

inline constexpr std::array<Language, 3> kLanguages = {Language::de, Language::es, Language::fr};
inline constexpr std::array<Gender, 3> kGenders = {Gender::masc, Gender::fem, Gender::neut};
inline constexpr std::array<Number, 2> kNumbers = {Number::sg, Number::pl};
inline constexpr std::array<Case, 4> kGermanCases = {Case::nom, Case::gen, Case::dat, Case::acc};
inline constexpr std::array<Declension, 3> kDeclensions = {Declension::weak, Declension::strong,
                                                           Declension::mixed};
inline constexpr std::array<std::string_view, 5> kScenes = {
    "BEWEGUNG", "LOKATION", "AUSDRUCK", "AFFIZIERTHEIT", "KLASSIFIKATION"};

std::string_view to_string(Language v);
std::string_view to_string(Gender v);
std::string_view to_string(Number v);
std::string_view to_string(Case v);
std::string_view to_string(Definiteness v);
std::string_view to_string(Declension v);
std::string_view to_string(Pos v);

std::optional<Language> parse_language(std::string_view s);
std::optional<Gender> parse_gender(std::string_view s);
std::optional<Number> parse_number(std::string_view s);
std::optional<Case> parse_case(std::string_view s);
std::optional<Definiteness> parse_definiteness(std::string_view s);
std::optional<Pos> parse_pos(std::string_view s);

bool is_scene(std::string_view s);

// Form-table keys: "gen.sg", "weak.masc.nom.sg", "sg", "fem.pl".
std::string noun_key(Language lang, Case c, Number n);
std::string adjective_key(Language lang, Declension d, Gender g, Case c, Number n);
std::vector<std::string> required_noun_keys(Language lang);
std::vector<std::string> required_adjective_keys(Language lang);

// Argument position ArgN with realization variant: Arg1.1, Arg5.2.
struct SlotRef {
  int index = 0;
  int variant = 0;

  std::string str() const;
  static std::optional<SlotRef> parse(std::string_view s);
  auto operator<=>(const SlotRef&) const = default;
};

struct ArgumentSlot {
  SlotRef ref;
  std::string role;
  std::string gloss;
};

enum class SlotKind { determiner, adjective, head, argument_filler, preposition, compound_modifier };
std::string_view to_string(SlotKind k);
std::optional<SlotKind> parse_slot_kind(std::string_view s);

struct PatternSlot {
  SlotKind kind = SlotKind::head;
  bool optional = false;                        // adjectives
  std::optional<SlotRef> binds;                 // fillers, compound modifiers
  std::optional<Case> required_case;            // fillers, prepositions
  Definiteness definiteness = Definiteness::definite;  // determiners
  Pos pos = Pos::noun;                          // fillers
  std::string text;                             // prepositions

  bool binds_argument() const {
    return kind == SlotKind::argument_filler || kind == SlotKind::compound_modifier;
  }
  bool is_noun() const {
    return kind == SlotKind::head || (kind == SlotKind::argument_filler && pos == Pos::noun);
  }
};

enum class Arity { mono, bi };
std::string_view to_string(Arity a);

struct RealizationPattern {
  std::string id;
  std::string label;
  std::vector<PatternSlot> slots;
  Arity arity = Arity::mono;
  Language language = Language::de;

  // Bound argument slots in surface order.
  std::vector<SlotRef> argument_slots() const;
};

// Noun-group layout of a pattern: which slots agree with which noun.
struct NounGroup {
  int noun_slot = -1;            // head or nominal filler
  std::vector<int> members;      // determiner, adjective, compound and adjectival-filler slots
  int preposition_slot = -1;     // governing preposition, if any
  Case group_case = Case::none;
};

struct GroupLayout {
  std::vector<int> group_of;     // per slot; -1 for prepositions
  std::vector<NounGroup> groups;
  std::vector<std::string> problems;
};

GroupLayout layout_groups(const RealizationPattern& p);

struct ValencyFrame {
  std::string lemma;
  Language language = Language::de;
  Gender gender = Gender::masc;
  std::string inflection_ref;
  std::vector<ArgumentSlot> slots;
  std::vector<RealizationPattern> patterns;
  std::string scene;
  std::string evidence = "synthetic";

  const RealizationPattern* find_pattern(std::string_view id) const;
  const ArgumentSlot* find_slot(const SlotRef& ref) const;
};

struct LexicalEntry {
  std::string id;
  std::string lemma;
  Language language = Language::de;
  Pos pos = Pos::noun;
  std::optional<Gender> gender;
  std::map<std::string, std::string> forms;
  std::optional<std::string> compound_link;
};

struct Lexicon {
  Language language = Language::de;
  std::vector<ValencyFrame> frames;
  std::map<std::string, LexicalEntry> entries;

  const ValencyFrame* find_frame(std::string_view lemma) const;
  const LexicalEntry* find_entry(std::string_view id) const;
};

// A violation tagged with the error type load_lexicon raises for it.
struct Violation {
  enum class Type { schema, dangling, duplicate };
  Type type = Type::schema;
  std::string message;
};

std::vector<Violation> check_frame(const ValencyFrame& frame);
std::vector<std::string> validate_frame(const ValencyFrame& frame);
std::vector<Violation> check_entry(const LexicalEntry& entry);

Lexicon parse_lexicon(const json& doc);
Lexicon load_lexicon(const std::filesystem::path& path);
json lexicon_to_json(const Lexicon& lex);

json read_json_file(const std::filesystem::path& path);

}  // namespace valgen
