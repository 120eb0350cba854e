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

#include "valgen/morphology.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "valgen/error.hpp"
#include "valgen/ontology.hpp"

namespace valgen {

namespace {

size_t gi(Gender g) { return static_cast<size_t>(g); }
size_t ci(Case c) { return static_cast<size_t>(c) - 1; }  // nom..acc -> 0..3

// [gender][case] for singular, [case] for plural
constexpr std::array<std::array<const char*, 4>, 3> kDeDefSg = {{
    {"der", "des", "dem", "den"},
    {"die", "der", "der", "die"},
    {"das", "des", "dem", "das"},
}};
constexpr std::array<const char*, 4> kDeDefPl = {"die", "der", "den", "die"};
constexpr std::array<std::array<const char*, 4>, 3> kDeIndefSg = {{
    {"ein", "eines", "einem", "einen"},
    {"eine", "einer", "einer", "eine"},
    {"ein", "eines", "einem", "ein"},
}};

// [definite/indefinite][gender masc/fem][sg/pl]
constexpr std::array<std::array<std::array<const char*, 2>, 2>, 2> kEs = {{
    {{{"el", "los"}, {"la", "las"}}},
    {{{"un", "unos"}, {"una", "unas"}}},
}};
constexpr std::array<std::array<std::array<const char*, 2>, 2>, 2> kFr = {{
    {{{"le", "les"}, {"la", "les"}}},
    {{{"un", "des"}, {"une", "des"}}},
}};

std::vector<Gender> genders_of(Language l) {
  if (l == Language::de) return {Gender::masc, Gender::fem, Gender::neut};
  return {Gender::masc, Gender::fem};
}

std::vector<Case> cases_of(Language l) {
  if (l == Language::de) return {kGermanCases.begin(), kGermanCases.end()};
  return {Case::none};
}

const std::string& cell(const LexicalEntry& e, const std::string& key) {
  auto it = e.forms.find(key);
  if (it == e.forms.end()) throw MissingForm(fmt::format("{} has no form {}", e.id, key));
  return it->second;
}

void check_case(Language lang, Case c) {
  if (lang == Language::de && c == Case::none)
    throw InvalidFeatureCombination("German forms need a case");
  if (lang != Language::de && c != Case::none)
    throw InvalidFeatureCombination(fmt::format("{} forms carry no case", to_string(lang)));
}

bool starts_with_vowel_sound(std::string_view w) {
  if (w.empty()) return false;
  static const std::array<std::string_view, 23> kStarts = {
      "a", "e", "i", "o", "u", "y", "h", "A", "E", "I", "O", "U", "Y", "H", "\xC3\xA0", "\xC3\xA2",
      "\xC3\xA9", "\xC3\xA8", "\xC3\xAA", "\xC3\xAE", "\xC3\xB4", "\xC3\x89", "\xC5\x93"};
  return std::any_of(kStarts.begin(), kStarts.end(), [&](std::string_view s) { return w.substr(0, s.size()) == s; });
}

struct Contraction {
  Language lang;
  std::string_view prep;
  std::string_view det;
  std::string_view result;
};

constexpr std::array<Contraction, 16> kContractions = {{
    {Language::fr, "de", "le", "du"},
    {Language::fr, "de", "les", "des"},
    {Language::fr, "\xC3\xA0", "le", "au"},
    {Language::fr, "\xC3\xA0", "les", "aux"},
    {Language::es, "de", "el", "del"},
    {Language::es, "a", "el", "al"},
    {Language::de, "von", "dem", "vom"},
    {Language::de, "zu", "dem", "zum"},
    {Language::de, "zu", "der", "zur"},
    {Language::de, "in", "dem", "im"},
    {Language::de, "an", "dem", "am"},
    {Language::de, "bei", "dem", "beim"},
    {Language::de, "in", "das", "ins"},
    {Language::de, "an", "das", "ans"},
    {Language::de, "auf", "das", "aufs"},
    {Language::de, "um", "das", "ums"},
}};

using Features = std::tuple<Gender, Number, Case>;

}  // namespace

std::string inflect_noun(const LexicalEntry& entry, Case c, Number n) {
  if (entry.pos != Pos::noun) throw InvalidFeatureCombination(fmt::format("{} is not a noun", entry.id));
  check_case(entry.language, c);
  return cell(entry, noun_key(entry.language, c, n));
}

std::string inflect_determiner(Definiteness d, Gender g, Case c, Number n, Language lang) {
  check_case(lang, c);
  if (d == Definiteness::none) throw InvalidFeatureCombination("no article for definiteness none");
  if (lang == Language::de) {
    if (d == Definiteness::definite) return n == Number::sg ? kDeDefSg[gi(g)][ci(c)] : kDeDefPl[ci(c)];
    if (n == Number::pl) throw InvalidFeatureCombination("German has no plural indefinite article");
    return kDeIndefSg[gi(g)][ci(c)];
  }
  if (g == Gender::neut) throw InvalidFeatureCombination("neuter is German only");
  const auto& table = lang == Language::es ? kEs : kFr;
  return table[d == Definiteness::definite ? 0 : 1][g == Gender::masc ? 0 : 1][n == Number::sg ? 0 : 1];
}

std::string inflect_adjective(const LexicalEntry& entry, Declension decl, Gender g, Case c, Number n) {
  if (entry.pos != Pos::adjective) throw InvalidFeatureCombination(fmt::format("{} is not an adjective", entry.id));
  check_case(entry.language, c);
  if (entry.language != Language::de && g == Gender::neut)
    throw InvalidFeatureCombination("neuter is German only");
  return cell(entry, adjective_key(entry.language, decl, g, c, n));
}

Declension declension_after(Definiteness d, Number n) {
  if (d == Definiteness::definite) return Declension::weak;
  if (d == Definiteness::indefinite && n == Number::sg) return Declension::mixed;
  return Declension::strong;
}

LexicalEntry compose_compound(const LexicalEntry& modifier, const LexicalEntry& head) {
  if (modifier.language != Language::de || head.language != Language::de || modifier.pos != Pos::noun ||
      head.pos != Pos::noun)
    throw InvalidFeatureCombination("compounds need two German nouns");
  if (!modifier.compound_link)
    throw MissingLinkElement(fmt::format("{} has no linking element", modifier.id));
  LexicalEntry out;
  std::string stem = upper_first(modifier.lemma) + *modifier.compound_link;
  out.id = modifier.id + "+" + head.id;
  out.lemma = stem + lower_first(head.lemma);
  out.language = Language::de;
  out.pos = Pos::noun;
  out.gender = head.gender;
  for (const auto& [key, form] : head.forms) out.forms[key] = stem + lower_first(form);
  return out;
}

void apply_phonology(Language lang, std::vector<TokenTrace>& tokens) {
  for (auto& t : tokens) {
    t.surface = t.form;
    t.glued = false;
  }
  // indices of tokens still present
  std::vector<size_t> live;
  for (size_t i = 0; i < tokens.size(); ++i)
    if (!tokens[i].form.empty()) live.push_back(i);
  for (size_t k = live.size(); k-- > 1;) {
    TokenTrace& cur = tokens[live[k - 1]];
    TokenTrace& next = tokens[live[k]];
    if (lang == Language::fr && !next.surface.empty() && starts_with_vowel_sound(next.surface)) {
      bool article = cur.kind == SlotKind::determiner && (cur.surface == "le" || cur.surface == "la");
      bool prep = cur.kind == SlotKind::preposition && cur.surface == "de";
      if (article || prep) {
        cur.surface = article ? "l'" : "d'";
        cur.glued = true;
      }
    }
    if (cur.kind == SlotKind::preposition && next.kind == SlotKind::determiner && !next.surface.empty()) {
      for (const auto& c : kContractions) {
        if (c.lang == lang && cur.surface == c.prep && next.surface == c.det) {
          cur.surface = std::string(c.result);
          cur.glued = next.glued;
          next.surface.clear();
          break;
        }
      }
    }
  }
}

std::string join_surface(const std::vector<TokenTrace>& tokens) {
  std::string out;
  bool glue = true;
  for (const auto& t : tokens) {
    if (t.surface.empty()) continue;
    if (!glue) out.push_back(' ');
    out += t.surface;
    glue = t.glued;
  }
  return out;
}

Realization realize_np(const RealizationPattern& pattern, const Binding& binding, const Lexicon& lexicon) {
  const Language lang = pattern.language;
  GroupLayout layout = layout_groups(pattern);
  if (!layout.problems.empty()) throw SchemaError(layout.problems.front());

  auto entry = [&](const std::string& id, Pos pos, const char* what) -> const LexicalEntry& {
    const LexicalEntry* e = lexicon.find_entry(id);
    if (!e) throw MissingBinding(fmt::format("{} '{}' is not in the lexicon", what, id));
    if (e->pos != pos)
      throw AgreementUnsatisfiable(fmt::format("{} '{}' must be a {}", what, id, to_string(pos)));
    return *e;
  };
  auto filler = [&](const PatternSlot& s) -> const std::string& {
    auto it = binding.fillers.find(*s.binds);
    if (it == binding.fillers.end() || it->second.empty())
      throw MissingBinding(fmt::format("pattern {}: slot {} is unbound", pattern.id, s.binds->str()));
    return it->second;
  };
  if (binding.head.empty()) throw MissingBinding(fmt::format("pattern {}: no head lexeme", pattern.id));
  const LexicalEntry& head = entry(binding.head, Pos::noun, "head");

  Realization r;
  std::optional<LexicalEntry> compound;
  for (size_t g = 0; g < layout.groups.size(); ++g) {
    const NounGroup& ng = layout.groups[g];
    const PatternSlot& noun = pattern.slots[ng.noun_slot];
    GroupFeatures f;
    f.noun_slot = ng.noun_slot;
    f.gcase = ng.group_case;
    if (noun.kind == SlotKind::head) {
      f.number = binding.head_number;
      for (int m : ng.members) {
        const PatternSlot& ms = pattern.slots[m];
        if (!ms.binds_argument()) continue;
        if (auto it = binding.numbers.find(*ms.binds); it != binding.numbers.end()) f.number = it->second;
        if (ms.kind == SlotKind::compound_modifier)
          compound = compose_compound(entry(filler(ms), Pos::noun, "compound modifier"), head);
      }
      f.gender = *head.gender;
    } else {
      const LexicalEntry& e = entry(filler(noun), Pos::noun, "filler");
      f.gender = *e.gender;
      if (auto it = binding.numbers.find(*noun.binds); it != binding.numbers.end()) f.number = it->second;
    }
    for (int m : ng.members)
      if (pattern.slots[m].kind == SlotKind::determiner) f.definiteness = pattern.slots[m].definiteness;
    f.zero_article = lang == Language::de && f.definiteness == Definiteness::indefinite && f.number == Number::pl;
    r.groups.push_back(f);
  }

  for (size_t i = 0; i < pattern.slots.size(); ++i) {
    const PatternSlot& s = pattern.slots[i];
    TokenTrace t;
    t.slot = static_cast<int>(i);
    t.kind = s.kind;
    t.group = layout.group_of[i];
    const GroupFeatures* f = t.group >= 0 ? &r.groups[t.group] : nullptr;
    switch (s.kind) {
      case SlotKind::preposition:
        t.source = "literal";
        t.form = s.text;
        break;
      case SlotKind::determiner:
        t.source = "determiner";
        if (s.definiteness == Definiteness::none || f->zero_article) break;
        t.key = fmt::format("{}.{}.{}.{}", to_string(s.definiteness), to_string(f->gender), to_string(f->gcase),
                            to_string(f->number));
        t.form = inflect_determiner(s.definiteness, f->gender, f->gcase, f->number, lang);
        break;
      case SlotKind::adjective:
      case SlotKind::argument_filler: {
        if (s.kind == SlotKind::argument_filler && s.pos == Pos::noun) {
          const LexicalEntry& e = entry(filler(s), Pos::noun, "filler");
          t.source = "lexicon";
          t.lexeme = e.id;
          t.key = noun_key(lang, f->gcase, f->number);
          t.form = inflect_noun(e, f->gcase, f->number);
          break;
        }
        std::string id;
        if (s.kind == SlotKind::adjective) {
          auto it = binding.adjectives.find(static_cast<int>(i));
          if (it == binding.adjectives.end() || it->second.empty()) {
            if (s.optional) break;
            throw MissingBinding(fmt::format("pattern {}: adjective slot {} is unbound", pattern.id, i));
          }
          id = it->second;
        } else {
          id = filler(s);
        }
        const LexicalEntry& e = entry(id, Pos::adjective, "adjective");
        Declension decl = declension_after(f->definiteness, f->number);
        t.source = "lexicon";
        t.lexeme = e.id;
        t.key = adjective_key(lang, decl, f->gender, f->gcase, f->number);
        t.form = inflect_adjective(e, decl, f->gender, f->gcase, f->number);
        break;
      }
      case SlotKind::compound_modifier:
        t.source = "compound";
        t.lexeme = filler(s);
        break;  // fused into the head token
      case SlotKind::head:
        t.key = noun_key(lang, f->gcase, f->number);
        if (compound) {
          t.source = "compound";
          t.lexeme = compound->id;
          t.form = inflect_noun(*compound, f->gcase, f->number);
        } else {
          t.source = "lexicon";
          t.lexeme = head.id;
          t.form = inflect_noun(head, f->gcase, f->number);
        }
        break;
    }
    r.tokens.push_back(std::move(t));
  }
  apply_phonology(lang, r.tokens);
  r.text = join_surface(r.tokens);
  return r;
}

Recheck agreement_recheck(const RealizationPattern& pattern, const Realization& r, const Lexicon& lexicon) {
  Recheck out;
  auto fail = [&](std::string m) {
    out.ok = false;
    out.problems.push_back(std::move(m));
  };
  const Language lang = pattern.language;
  std::vector<std::set<Features>> admissible(r.groups.size());
  std::vector<bool> seeded(r.groups.size(), false);
  auto narrow = [&](int g, const std::set<Features>& s, const TokenTrace& t) {
    if (s.empty()) fail(fmt::format("token '{}' matches no table cell", t.form));
    if (!seeded[g]) {
      admissible[g] = s;
      seeded[g] = true;
      return;
    }
    std::set<Features> both;
    std::set_intersection(admissible[g].begin(), admissible[g].end(), s.begin(), s.end(),
                          std::inserter(both, both.begin()));
    admissible[g] = std::move(both);
  };

  for (const auto& t : r.tokens) {
    if (t.slot < 0 || t.slot >= static_cast<int>(pattern.slots.size())) {
      fail("token outside the pattern");
      continue;
    }
    const PatternSlot& s = pattern.slots[t.slot];
    if (t.form.empty()) continue;
    if (t.source == "literal") {
      if (s.kind != SlotKind::preposition || t.form != s.text) fail(fmt::format("literal '{}' not in pattern", t.form));
      continue;
    }
    if (t.group < 0 || t.group >= static_cast<int>(r.groups.size())) {
      fail(fmt::format("token '{}' outside any noun group", t.form));
      continue;
    }
    const GroupFeatures& f = r.groups[t.group];
    std::set<Features> s_feats;
    if (t.source == "determiner") {
      for (Gender g : genders_of(lang))
        for (Number n : kNumbers)
          for (Case c : cases_of(lang)) {
            try {
              if (inflect_determiner(s.definiteness, g, c, n, lang) == t.form) s_feats.insert({g, n, c});
            } catch (const InvalidFeatureCombination&) {
            }
          }
    } else {
      const LexicalEntry* e = nullptr;
      std::optional<LexicalEntry> composed;
      if (t.source == "compound") {
        auto plus = t.lexeme.find('+');
        const LexicalEntry* mod = plus == std::string::npos ? nullptr : lexicon.find_entry(t.lexeme.substr(0, plus));
        const LexicalEntry* hd = plus == std::string::npos ? nullptr : lexicon.find_entry(t.lexeme.substr(plus + 1));
        if (!mod || !hd) {
          fail(fmt::format("compound '{}' has unknown parts", t.lexeme));
          continue;
        }
        composed = compose_compound(*mod, *hd);
        e = &*composed;
      } else {
        e = lexicon.find_entry(t.lexeme);
      }
      if (!e) {
        fail(fmt::format("lexeme '{}' not in the lexicon", t.lexeme));
        continue;
      }
      for (Number n : kNumbers)
        for (Case c : cases_of(lang)) {
          if (e->pos == Pos::noun) {
            if (inflect_noun(*e, c, n) == t.form) s_feats.insert({*e->gender, n, c});
          } else {
            for (Gender g : genders_of(lang)) {
              auto key = adjective_key(lang, declension_after(f.definiteness, n), g, c, n);
              auto it = e->forms.find(key);
              if (it != e->forms.end() && it->second == t.form) s_feats.insert({g, n, c});
            }
          }
        }
    }
    narrow(t.group, s_feats, t);
  }
  for (size_t g = 0; g < r.groups.size(); ++g) {
    const auto& f = r.groups[g];
    if (!admissible[g].count({f.gender, f.number, f.gcase}))
      fail(fmt::format("noun group {} admits no shared {}/{}/{} reading", g + 1, to_string(f.gender),
                       to_string(f.number), to_string(f.gcase)));
  }
  auto copy = r.tokens;
  apply_phonology(lang, copy);
  if (join_surface(copy) != r.text) fail("text is not the phonology of the emitted forms");
  return out;
}

json to_json(const Realization& r) {
  json tokens = json::array();
  for (const auto& t : r.tokens) {
    if (t.form.empty() && t.source != "compound") continue;
    tokens.push_back({{"slot", t.slot},
                      {"kind", to_string(t.kind)},
                      {"lexeme", t.lexeme},
                      {"key", t.key},
                      {"source", t.source},
                      {"form", t.form},
                      {"surface", t.surface}});
  }
  json groups = json::array();
  for (const auto& g : r.groups)
    groups.push_back({{"gender", to_string(g.gender)}, {"number", to_string(g.number)}, {"case", to_string(g.gcase)}});
  return {{"tokens", tokens}, {"groups", groups}};
}

}  // namespace valgen
