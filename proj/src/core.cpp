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

#include "valgen/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include <fmt/format.h>

#include "valgen/error.hpp"

namespace valgen {

namespace {

template <typename E, size_t N>
std::optional<E> lookup(std::string_view s, const std::array<std::pair<std::string_view, E>, N>& table) {
  for (const auto& [name, value] : table)
    if (name == s) return value;
  return std::nullopt;
}

template <typename E, size_t N>
std::string_view name_of(E v, const std::array<std::pair<std::string_view, E>, N>& table) {
  for (const auto& [name, value] : table)
    if (value == v) return name;
  return "?";
}

constexpr std::array<std::pair<std::string_view, Language>, 3> kLanguageNames = {
    {{"de", Language::de}, {"es", Language::es}, {"fr", Language::fr}}};
constexpr std::array<std::pair<std::string_view, Gender>, 3> kGenderNames = {
    {{"masc", Gender::masc}, {"fem", Gender::fem}, {"neut", Gender::neut}}};
constexpr std::array<std::pair<std::string_view, Number>, 2> kNumberNames = {
    {{"sg", Number::sg}, {"pl", Number::pl}}};
constexpr std::array<std::pair<std::string_view, Case>, 5> kCaseNames = {
    {{"none", Case::none}, {"nom", Case::nom}, {"gen", Case::gen}, {"dat", Case::dat}, {"acc", Case::acc}}};
constexpr std::array<std::pair<std::string_view, Definiteness>, 3> kDefinitenessNames = {
    {{"definite", Definiteness::definite},
     {"indefinite", Definiteness::indefinite},
     {"none", Definiteness::none}}};
constexpr std::array<std::pair<std::string_view, Declension>, 3> kDeclensionNames = {
    {{"weak", Declension::weak}, {"strong", Declension::strong}, {"mixed", Declension::mixed}}};
constexpr std::array<std::pair<std::string_view, Pos>, 2> kPosNames = {
    {{"noun", Pos::noun}, {"adjective", Pos::adjective}}};
constexpr std::array<std::pair<std::string_view, SlotKind>, 6> kSlotKindNames = {
    {{"determiner", SlotKind::determiner},
     {"adjective", SlotKind::adjective},
     {"head", SlotKind::head},
     {"argument_filler", SlotKind::argument_filler},
     {"preposition", SlotKind::preposition},
     {"compound_modifier", SlotKind::compound_modifier}}};

}  // namespace

std::string_view to_string(Language v) { return name_of(v, kLanguageNames); }
std::string_view to_string(Gender v) { return name_of(v, kGenderNames); }
std::string_view to_string(Number v) { return name_of(v, kNumberNames); }
std::string_view to_string(Case v) { return name_of(v, kCaseNames); }
std::string_view to_string(Definiteness v) { return name_of(v, kDefinitenessNames); }
std::string_view to_string(Declension v) { return name_of(v, kDeclensionNames); }
std::string_view to_string(Pos v) { return name_of(v, kPosNames); }
std::string_view to_string(SlotKind v) { return name_of(v, kSlotKindNames); }
std::string_view to_string(Arity a) { return a == Arity::mono ? "mono" : "bi"; }

std::optional<Language> parse_language(std::string_view s) { return lookup(s, kLanguageNames); }
std::optional<Gender> parse_gender(std::string_view s) { return lookup(s, kGenderNames); }
std::optional<Number> parse_number(std::string_view s) { return lookup(s, kNumberNames); }
std::optional<Case> parse_case(std::string_view s) { return lookup(s, kCaseNames); }
std::optional<Definiteness> parse_definiteness(std::string_view s) {
  return lookup(s, kDefinitenessNames);
}
std::optional<Pos> parse_pos(std::string_view s) { return lookup(s, kPosNames); }
std::optional<SlotKind> parse_slot_kind(std::string_view s) { return lookup(s, kSlotKindNames); }

bool is_scene(std::string_view s) {
  return std::find(kScenes.begin(), kScenes.end(), s) != kScenes.end();
}

std::string noun_key(Language lang, Case c, Number n) {
  if (lang == Language::de) return fmt::format("{}.{}", to_string(c), to_string(n));
  return std::string(to_string(n));
}

std::string adjective_key(Language lang, Declension d, Gender g, Case c, Number n) {
  if (lang == Language::de)
    return fmt::format("{}.{}.{}.{}", to_string(d), to_string(g), to_string(c), to_string(n));
  return fmt::format("{}.{}", to_string(g), to_string(n));
}

std::vector<std::string> required_noun_keys(Language lang) {
  std::vector<std::string> keys;
  if (lang == Language::de) {
    for (Case c : kGermanCases)
      for (Number n : kNumbers) keys.push_back(noun_key(lang, c, n));
  } else {
    for (Number n : kNumbers) keys.push_back(noun_key(lang, Case::none, n));
  }
  return keys;
}

std::vector<std::string> required_adjective_keys(Language lang) {
  std::vector<std::string> keys;
  if (lang == Language::de) {
    for (Declension d : kDeclensions)
      for (Gender g : kGenders)
        for (Case c : kGermanCases)
          for (Number n : kNumbers) keys.push_back(adjective_key(lang, d, g, c, n));
  } else {
    for (Gender g : {Gender::masc, Gender::fem})
      for (Number n : kNumbers) keys.push_back(adjective_key(lang, Declension::weak, g, Case::none, n));
  }
  return keys;
}

std::string SlotRef::str() const { return fmt::format("Arg{}.{}", index, variant); }

std::optional<SlotRef> SlotRef::parse(std::string_view s) {
  if (s.substr(0, 3) != "Arg") return std::nullopt;
  s.remove_prefix(3);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  SlotRef r;
  auto a = s.substr(0, dot), b = s.substr(dot + 1);
  if (a.empty() || b.empty()) return std::nullopt;
  auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), r.index);
  auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), r.variant);
  if (ea != std::errc() || eb != std::errc() || pa != a.data() + a.size() || pb != b.data() + b.size())
    return std::nullopt;
  if (r.index < 1 || r.variant < 1) return std::nullopt;
  return r;
}

std::vector<SlotRef> RealizationPattern::argument_slots() const {
  std::vector<SlotRef> out;
  for (const auto& s : slots)
    if (s.binds_argument() && s.binds) out.push_back(*s.binds);
  return out;
}

GroupLayout layout_groups(const RealizationPattern& p) {
  GroupLayout g;
  g.group_of.assign(p.slots.size(), -1);
  const bool romance = p.language != Language::de;
  int current = -1;
  int pending_prep = -1;

  auto open = [&]() {
    NounGroup ng;
    ng.preposition_slot = pending_prep;
    pending_prep = -1;
    g.groups.push_back(ng);
    current = static_cast<int>(g.groups.size()) - 1;
  };
  auto has_noun = [&]() { return current >= 0 && g.groups[current].noun_slot >= 0; };

  for (size_t i = 0; i < p.slots.size(); ++i) {
    const auto& s = p.slots[i];
    const int si = static_cast<int>(i);
    switch (s.kind) {
      case SlotKind::preposition:
        current = -1;
        pending_prep = si;
        break;
      case SlotKind::determiner:
      case SlotKind::compound_modifier:
        if (current < 0 || has_noun()) open();
        g.groups[current].members.push_back(si);
        g.group_of[i] = current;
        break;
      case SlotKind::adjective:
      case SlotKind::argument_filler:
        if (s.kind == SlotKind::argument_filler && s.pos == Pos::noun) {
          if (current < 0 || has_noun()) open();
          g.groups[current].noun_slot = si;
        } else if (has_noun() && romance) {
          g.groups[current].members.push_back(si);  // postnominal
        } else {
          if (current < 0 || has_noun()) open();
          g.groups[current].members.push_back(si);
        }
        g.group_of[i] = current;
        break;
      case SlotKind::head:
        if (current < 0 || has_noun()) open();
        g.groups[current].noun_slot = si;
        g.group_of[i] = current;
        break;
    }
  }
  if (pending_prep >= 0) g.problems.push_back(fmt::format("pattern {}: trailing preposition", p.id));

  for (size_t gi = 0; gi < g.groups.size(); ++gi) {
    auto& ng = g.groups[gi];
    if (ng.noun_slot < 0) {
      g.problems.push_back(fmt::format("pattern {}: noun group {} has no noun", p.id, gi + 1));
      continue;
    }
    const auto& noun = p.slots[ng.noun_slot];
    std::optional<Case> c = noun.required_case;
    if (ng.preposition_slot >= 0) {
      auto pc = p.slots[ng.preposition_slot].required_case;
      if (c && pc && *c != *pc)
        g.problems.push_back(fmt::format("pattern {}: conflicting case in noun group {}", p.id, gi + 1));
      if (!c) c = pc;
    }
    ng.group_case = c.value_or(romance ? Case::none : Case::nom);
    for (int m : ng.members) {
      const auto& ms = p.slots[m];
      if (ms.kind == SlotKind::compound_modifier && noun.kind != SlotKind::head)
        g.problems.push_back(fmt::format("pattern {}: compound modifier must precede the head", p.id));
    }
  }
  return g;
}

const RealizationPattern* ValencyFrame::find_pattern(std::string_view id) const {
  for (const auto& p : patterns)
    if (p.id == id) return &p;
  return nullptr;
}

const ArgumentSlot* ValencyFrame::find_slot(const SlotRef& ref) const {
  for (const auto& s : slots)
    if (s.ref == ref) return &s;
  return nullptr;
}

const ValencyFrame* Lexicon::find_frame(std::string_view lemma) const {
  for (const auto& f : frames)
    if (f.lemma == lemma) return &f;
  return nullptr;
}

const LexicalEntry* Lexicon::find_entry(std::string_view id) const {
  auto it = entries.find(std::string(id));
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<Violation> check_frame(const ValencyFrame& f) {
  using T = Violation::Type;
  std::vector<Violation> out;
  auto add = [&](T t, std::string m) { out.push_back({t, std::move(m)}); };
  const bool romance = f.language != Language::de;

  if (f.lemma.empty()) add(T::schema, "frame: empty lemma");
  if (!is_scene(f.scene)) add(T::schema, fmt::format("scene {} not in the scene set", f.scene));
  if (romance && f.gender == Gender::neut) add(T::schema, "gender neut is German only");

  std::set<SlotRef> refs;
  for (const auto& s : f.slots) {
    if (s.ref.index < 1 || s.ref.variant < 1)
      add(T::schema, fmt::format("slot {}: index and variant must be >= 1", s.ref.str()));
    if (!refs.insert(s.ref).second) add(T::duplicate, fmt::format("slot {}: duplicate", s.ref.str()));
    if (s.role.empty()) add(T::schema, fmt::format("slot {}: empty role", s.ref.str()));
  }

  std::set<std::string> ids;
  for (const auto& p : f.patterns) {
    if (p.id.empty()) add(T::schema, "pattern: empty id");
    if (!ids.insert(p.id).second) add(T::duplicate, fmt::format("pattern {}: duplicate id", p.id));
    if (p.language != f.language) add(T::schema, fmt::format("pattern {}: language mismatch", p.id));
    int heads = 0, bound = 0, head_attached = 0;
    std::set<SlotRef> seen;
    for (const auto& s : p.slots) {
      if (s.kind == SlotKind::head) ++heads;
      if (s.binds_argument()) {
        ++bound;
        if (!s.binds) {
          add(T::schema, fmt::format("pattern {}: {} slot without binding", p.id, to_string(s.kind)));
        } else {
          if (!refs.count(*s.binds))
            add(T::dangling, fmt::format("pattern {}: binds unknown slot {}", p.id, s.binds->str()));
          if (!seen.insert(*s.binds).second)
            add(T::schema, fmt::format("pattern {}: slot {} bound twice", p.id, s.binds->str()));
        }
      }
      if (s.kind == SlotKind::preposition && s.text.empty())
        add(T::schema, fmt::format("pattern {}: preposition without text", p.id));
      if (s.required_case) {
        if (romance && *s.required_case != Case::none)
          add(T::schema, fmt::format("pattern {}: case marking on a {} pattern", p.id, to_string(f.language)));
        if (!romance && *s.required_case == Case::none)
          add(T::schema, fmt::format("pattern {}: German slots need a case", p.id));
      }
    }
    if (heads == 0) add(T::schema, fmt::format("pattern {}: no head slot", p.id));
    if (heads > 1) add(T::schema, fmt::format("pattern {}: multiple head slots", p.id));
    if (bound < 1 || bound > 2)
      add(T::schema, fmt::format("pattern {}: {} argument slots, expected 1 or 2", p.id, bound));
    else if ((bound == 1) != (p.arity == Arity::mono))
      add(T::schema, fmt::format("pattern {}: arity {} does not match {} argument slots", p.id,
                                 to_string(p.arity), bound));
    if (heads == 1) {
      GroupLayout layout = layout_groups(p);
      for (auto& m : layout.problems) add(T::schema, m);
      for (const auto& g : layout.groups)
        if (g.noun_slot >= 0 && p.slots[g.noun_slot].kind == SlotKind::head)
          for (int m : g.members)
            if (p.slots[m].binds_argument()) ++head_attached;
      if (head_attached > 1)
        add(T::schema, fmt::format("pattern {}: more than one argument attached to the head", p.id));
    }
  }
  return out;
}

std::vector<std::string> validate_frame(const ValencyFrame& frame) {
  std::vector<std::string> out;
  for (auto& v : check_frame(frame)) out.push_back(std::move(v.message));
  return out;
}

std::vector<Violation> check_entry(const LexicalEntry& e) {
  using T = Violation::Type;
  std::vector<Violation> out;
  auto add = [&](std::string m) { out.push_back({T::schema, fmt::format("entry {}: {}", e.id, m)}); };
  if (e.id.empty()) add("empty id");
  if (e.lemma.empty()) add("empty lemma");
  const bool romance = e.language != Language::de;
  std::vector<std::string> keys;
  if (e.pos == Pos::noun) {
    if (!e.gender) add("noun without gender");
    else if (romance && *e.gender == Gender::neut) add("gender neut is German only");
    keys = required_noun_keys(e.language);
  } else {
    if (e.gender) add("adjective with gender");
    keys = required_adjective_keys(e.language);
  }
  for (const auto& k : keys) {
    auto it = e.forms.find(k);
    if (it == e.forms.end() || it->second.empty()) add(fmt::format("missing form {}", k));
  }
  for (const auto& [k, v] : e.forms)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) add(fmt::format("unknown form key {}", k));
  if (e.compound_link && (romance || e.pos != Pos::noun)) add("compound_link on a non-German noun");
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(fmt::format("{}: expected an object", where));
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(fmt::format("{}: missing field '{}'", where, key));
  return *it;
}

std::string str_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw SchemaError(fmt::format("{}: field '{}' must be a string", where, key));
  return v.get<std::string>();
}

std::optional<std::string> opt_str(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(fmt::format("{}: field '{}' must be a string", where, key));
  return it->get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw SchemaError(fmt::format("{}: field '{}' must be an array", where, key));
  return v;
}

template <typename E>
E parse_enum(std::optional<E> v, const std::string& raw, const char* what, const std::string& where) {
  if (!v) throw SchemaError(fmt::format("{}: invalid {} '{}'", where, what, raw));
  return *v;
}

PatternSlot parse_pattern_slot(const json& j, const std::string& where) {
  PatternSlot s;
  auto kind = str_field(j, "kind", where);
  s.kind = parse_enum(parse_slot_kind(kind), kind, "slot kind", where);
  if (auto b = opt_str(j, "binds", where)) {
    s.binds = SlotRef::parse(*b);
    if (!s.binds) throw SchemaError(fmt::format("{}: invalid slot reference '{}'", where, *b));
  }
  if (auto c = opt_str(j, "case", where)) s.required_case = parse_enum(parse_case(*c), *c, "case", where);
  if (auto d = opt_str(j, "definiteness", where))
    s.definiteness = parse_enum(parse_definiteness(*d), *d, "definiteness", where);
  if (auto p = opt_str(j, "pos", where)) s.pos = parse_enum(parse_pos(*p), *p, "pos", where);
  if (auto t = opt_str(j, "text", where)) s.text = *t;
  if (auto it = j.find("optional"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError(fmt::format("{}: 'optional' must be boolean", where));
    s.optional = it->get<bool>();
  }
  return s;
}

json pattern_slot_to_json(const PatternSlot& s) {
  json j = {{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case SlotKind::determiner:
      j["definiteness"] = to_string(s.definiteness);
      break;
    case SlotKind::adjective:
      j["optional"] = s.optional;
      break;
    case SlotKind::argument_filler:
      j["pos"] = to_string(s.pos);
      break;
    case SlotKind::preposition:
      j["text"] = s.text;
      break;
    default:
      break;
  }
  if (s.binds) j["binds"] = s.binds->str();
  if (s.required_case) j["case"] = to_string(*s.required_case);
  return j;
}

ValencyFrame parse_frame(const json& j, Language lang, size_t index) {
  std::string where = fmt::format("frames[{}]", index);
  ValencyFrame f;
  f.language = lang;
  f.lemma = str_field(j, "lemma", where);
  where = fmt::format("frame {}", f.lemma);
  auto g = str_field(j, "gender", where);
  f.gender = parse_enum(parse_gender(g), g, "gender", where);
  f.inflection_ref = opt_str(j, "inflection_ref", where).value_or(f.lemma);
  f.scene = str_field(j, "scene", where);
  f.evidence = opt_str(j, "evidence", where).value_or("synthetic");
  for (const auto& s : array_field(j, "slots", where)) {
    ArgumentSlot a;
    auto ref = str_field(s, "arg", where);
    auto parsed = SlotRef::parse(ref);
    if (!parsed) throw SchemaError(fmt::format("{}: invalid slot reference '{}'", where, ref));
    a.ref = *parsed;
    a.role = str_field(s, "role", where);
    a.gloss = opt_str(s, "gloss", where).value_or("");
    f.slots.push_back(std::move(a));
  }
  for (const auto& pj : array_field(j, "patterns", where)) {
    RealizationPattern p;
    p.language = lang;
    p.id = str_field(pj, "id", where);
    std::string pw = fmt::format("{} pattern {}", where, p.id);
    p.label = opt_str(pj, "label", pw).value_or(p.id);
    auto arity = str_field(pj, "arity", pw);
    if (arity == "mono") p.arity = Arity::mono;
    else if (arity == "bi") p.arity = Arity::bi;
    else throw SchemaError(fmt::format("{}: invalid arity '{}'", pw, arity));
    for (const auto& sj : array_field(pj, "slots", pw)) p.slots.push_back(parse_pattern_slot(sj, pw));
    f.patterns.push_back(std::move(p));
  }
  return f;
}

LexicalEntry parse_entry(const json& j, Language lang, size_t index) {
  std::string where = fmt::format("entries[{}]", index);
  LexicalEntry e;
  e.language = lang;
  e.id = str_field(j, "id", where);
  where = fmt::format("entry {}", e.id);
  e.lemma = opt_str(j, "lemma", where).value_or(e.id);
  auto pos = str_field(j, "pos", where);
  e.pos = parse_enum(parse_pos(pos), pos, "pos", where);
  if (auto g = opt_str(j, "gender", where)) e.gender = parse_enum(parse_gender(*g), *g, "gender", where);
  const json& forms = field(j, "forms", where);
  if (!forms.is_object()) throw SchemaError(fmt::format("{}: 'forms' must be an object", where));
  for (auto it = forms.begin(); it != forms.end(); ++it) {
    if (!it.value().is_string()) throw SchemaError(fmt::format("{}: form {} must be a string", where, it.key()));
    e.forms[it.key()] = it.value().get<std::string>();
  }
  e.compound_link = opt_str(j, "compound_link", where);
  return e;
}

[[noreturn]] void raise(const Violation& v) {
  switch (v.type) {
    case Violation::Type::dangling:
      throw DanglingReference(v.message);
    case Violation::Type::duplicate:
      throw DuplicateId(v.message);
    default:
      throw SchemaError(v.message);
  }
}

}  // namespace

Lexicon parse_lexicon(const json& doc) {
  Lexicon lex;
  if (doc.is_object() && doc.empty()) return lex;
  auto code = str_field(doc, "language", "lexicon");
  auto lang = parse_language(code);
  if (!lang) throw SchemaError(fmt::format("lexicon: unknown language '{}'", code));
  lex.language = *lang;

  const json& entries = array_field(doc, "entries", "lexicon");
  for (size_t i = 0; i < entries.size(); ++i) {
    LexicalEntry e = parse_entry(entries[i], lex.language, i);
    auto violations = check_entry(e);
    if (!violations.empty()) raise(violations.front());
    std::string id = e.id;
    if (!lex.entries.emplace(id, std::move(e)).second)
      throw DuplicateId(fmt::format("entry {}: duplicate id", id));
  }

  std::set<std::string> pattern_ids;
  const json& frames = array_field(doc, "frames", "lexicon");
  for (size_t i = 0; i < frames.size(); ++i) {
    ValencyFrame f = parse_frame(frames[i], lex.language, i);
    auto violations = check_frame(f);
    if (!violations.empty()) raise(violations.front());
    if (lex.find_frame(f.lemma)) throw DuplicateId(fmt::format("frame {}: duplicate lemma", f.lemma));
    for (const auto& p : f.patterns)
      if (!pattern_ids.insert(p.id).second)
        throw DuplicateId(fmt::format("pattern {}: id used by more than one frame", p.id));
    const LexicalEntry* head = lex.find_entry(f.inflection_ref);
    if (!head)
      throw DanglingReference(fmt::format("frame {}: inflection_ref {} has no entry", f.lemma, f.inflection_ref));
    if (head->pos != Pos::noun || head->gender != f.gender)
      throw SchemaError(fmt::format("frame {}: head entry must be a noun of gender {}", f.lemma,
                                    to_string(f.gender)));
    lex.frames.push_back(std::move(f));
  }
  return lex;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(fmt::format("cannot open {}", path.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_json_file(path));
}

json lexicon_to_json(const Lexicon& lex) {
  json frames = json::array();
  for (const auto& f : lex.frames) {
    json slots = json::array();
    for (const auto& s : f.slots) slots.push_back({{"arg", s.ref.str()}, {"role", s.role}, {"gloss", s.gloss}});
    json patterns = json::array();
    for (const auto& p : f.patterns) {
      json ps = json::array();
      for (const auto& s : p.slots) ps.push_back(pattern_slot_to_json(s));
      patterns.push_back({{"id", p.id}, {"label", p.label}, {"arity", to_string(p.arity)}, {"slots", ps}});
    }
    frames.push_back({{"lemma", f.lemma},
                      {"gender", to_string(f.gender)},
                      {"inflection_ref", f.inflection_ref},
                      {"scene", f.scene},
                      {"evidence", f.evidence},
                      {"slots", slots},
                      {"patterns", patterns}});
  }
  json entries = json::array();
  for (const auto& [id, e] : lex.entries) {
    json j = {{"id", e.id}, {"lemma", e.lemma}, {"pos", to_string(e.pos)}, {"forms", e.forms}};
    if (e.gender) j["gender"] = to_string(*e.gender);
    if (e.compound_link) j["compound_link"] = *e.compound_link;
    entries.push_back(std::move(j));
  }
  return {{"language", to_string(lex.language)}, {"frames", frames}, {"entries", entries}};
}

}  // namespace valgen
