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

#include <doctest.h>

#include <regex>
#include <set>

#include "support.hpp"
#include "valgen/core.hpp"
#include "valgen/error.hpp"

using namespace valgen;
using valgen::testing::Gen;

namespace {

Lexicon lexicon_de() { return load_lexicon(valgen::testing::data_dir() / "lexicon.de.json"); }

const ValencyFrame& frame_of(const Lexicon& lex, std::string_view lemma) {
  const ValencyFrame* f = lex.find_frame(lemma);
  REQUIRE(f != nullptr);
  return *f;
}

// Scene -> (es, de, fr) triples from the noun overview of the reference text.
std::map<std::string, std::vector<std::array<std::string, 3>>> reference_nouns() {
  std::istringstream in(valgen::testing::reference_text());
  std::map<std::string, std::vector<std::array<std::string, 3>>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string scene = line.substr(0, tab);
    if (!is_scene(scene)) continue;
    std::istringstream words(line.substr(tab + 1));
    std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
    REQUIRE(w.size() % 3 == 0);
    for (size_t i = 0; i < w.size(); i += 3) out[scene].push_back({w[i], w[i + 1], w[i + 2]});
  }
  return out;
}

}  // namespace

TEST_CASE("feature enums round-trip through their names") {
  for (Language l : kLanguages) CHECK(parse_language(to_string(l)) == l);
  for (Gender g : kGenders) CHECK(parse_gender(to_string(g)) == g);
  for (Number n : kNumbers) CHECK(parse_number(to_string(n)) == n);
  for (Case c : {Case::none, Case::nom, Case::gen, Case::dat, Case::acc}) CHECK(parse_case(to_string(c)) == c);
  CHECK_FALSE(parse_language("it").has_value());
  CHECK_FALSE(parse_language("DE").has_value());
  CHECK_FALSE(parse_gender("neuter").has_value());
}

TEST_CASE("slot references") {
  auto r = SlotRef::parse("Arg5.2");
  REQUIRE(r);
  CHECK(r->index == 5);
  CHECK(r->variant == 2);
  CHECK(r->str() == "Arg5.2");
  for (const char* bad : {"Arg0.1", "Arg5", "arg5.2", "Arg5.0", "Arg.2", "Arg5.2x", ""})
    CHECK_FALSE(SlotRef::parse(bad).has_value());
  CHECK(*SlotRef::parse("Arg1.4") < *SlotRef::parse("Arg2.1"));
}

TEST_CASE("form-table keys") {
  CHECK(noun_key(Language::de, Case::gen, Number::sg) == "gen.sg");
  CHECK(noun_key(Language::fr, Case::none, Number::pl) == "pl");
  CHECK(adjective_key(Language::de, Declension::weak, Gender::masc, Case::nom, Number::sg) == "weak.masc.nom.sg");
  CHECK(adjective_key(Language::es, Declension::weak, Gender::fem, Case::none, Number::pl) == "fem.pl");
  CHECK(required_noun_keys(Language::de).size() == 8);
  CHECK(required_adjective_keys(Language::de).size() == 3 * 3 * 4 * 2);
  CHECK(required_adjective_keys(Language::fr).size() == 2 * 2);
}

TEST_CASE("the German lexicon carries the TEXT argument inventory") {
  Lexicon lex = lexicon_de();
  const ValencyFrame& text = frame_of(lex, "Text");
  std::set<std::string> refs;
  for (const auto& s : text.slots) refs.insert(s.ref.str());
  for (const char* want : {"Arg1.1", "Arg1.3", "Arg1.4", "Arg2.1", "Arg3.1", "Arg4.1", "Arg4.2", "Arg5.1", "Arg5.2"})
    CHECK(refs.count(want) == 1);
  CHECK(text.gender == Gender::masc);
  CHECK(text.scene == "AUSDRUCK");
  CHECK(text.find_pattern("det+adj+Text+gen+adj+N1aG") != nullptr);
  CHECK(text.find_slot(*SlotRef::parse("Arg1.1"))->role == "AGENS");
}

TEST_CASE("noun inventory per language matches the reference scene overview") {
  auto table = reference_nouns();
  REQUIRE(table.size() == 5);
  size_t total = 0;
  const std::array<Language, 3> order = {Language::es, Language::de, Language::fr};
  for (size_t li = 0; li < 3; ++li) {
    Lexicon lex = load_lexicon(valgen::testing::data_dir() / fmt::format("lexicon.{}.json", to_string(order[li])));
    std::map<std::string, std::set<std::string>> got;
    for (const auto& f : lex.frames) got[f.scene].insert(f.lemma);
    std::map<std::string, std::set<std::string>> want;
    for (const auto& [scene, triples] : table)
      for (const auto& t : triples) want[scene].insert(t[li]);
    CHECK(got == want);
    total += lex.frames.size();
  }
  CHECK(total == 60);
}

TEST_CASE("empty and minimal lexica") {
  Lexicon a = parse_lexicon(json::object());
  CHECK(a.frames.empty());
  CHECK(a.entries.empty());
  Lexicon b = parse_lexicon(json{{"language", "fr"}, {"frames", json::array()}, {"entries", json::array()}});
  CHECK(b.language == Language::fr);
  CHECK(b.frames.empty());
  CHECK_THROWS_AS(parse_lexicon(json{{"language", "it"}, {"frames", json::array()}}), SchemaError);
}

TEST_CASE("a pattern binding an undeclared slot is a dangling reference") {
  json doc = lexicon_to_json(lexicon_de());
  for (auto& f : doc["frames"])
    if (f["lemma"] == "Text")
      for (auto& p : f["patterns"])
        for (auto& s : p["slots"])
          if (s.contains("binds")) {
            s["binds"] = "Arg9.1";
            goto done;
          }
done:
  CHECK_THROWS_AS(parse_lexicon(doc), DanglingReference);
}

TEST_CASE("duplicate ids are rejected") {
  json doc = lexicon_to_json(lexicon_de());
  doc["entries"].push_back(doc["entries"][0]);
  CHECK_THROWS_AS(parse_lexicon(doc), DuplicateId);
  json doc2 = lexicon_to_json(lexicon_de());
  doc2["frames"].push_back(doc2["frames"][0]);
  CHECK_THROWS_AS(parse_lexicon(doc2), DuplicateId);
}

TEST_CASE("validate_frame") {
  Lexicon lex = lexicon_de();
  for (const auto& f : lex.frames) CHECK(validate_frame(f).empty());

  ValencyFrame two_heads = frame_of(lex, "Text");
  two_heads.patterns[0].id = "p1";
  two_heads.patterns[0].slots.push_back(PatternSlot{SlotKind::head});
  auto v = validate_frame(two_heads);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "pattern p1: multiple head slots");

  ValencyFrame weather = frame_of(lex, "Text");
  weather.scene = "WETTER";
  v = validate_frame(weather);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("scene") != std::string::npos);
  CHECK(v[0].find("WETTER") != std::string::npos);

  // The accepted scenes are exactly the labels of the reference noun overview.
  auto table = reference_nouns();
  std::set<std::string> scenes;
  for (const auto& [s, _] : table) scenes.insert(s);
  CHECK(scenes == std::set<std::string>(kScenes.begin(), kScenes.end()));
  for (const auto& s : scenes) {
    ValencyFrame f = frame_of(lex, "Text");
    f.scene = s;
    CHECK(validate_frame(f).empty());
  }
}

TEST_CASE("property: load succeeds iff validate_frame reports nothing") {
  Lexicon lex = lexicon_de();
  json base = lexicon_to_json(lex);
  Gen gen(20260101);
  int failures_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ValencyFrame f = gen.pick(lex.frames);
    const int mutation = gen.integer(0, 8);
    auto& p = f.patterns[static_cast<size_t>(gen.integer(0, static_cast<int>(f.patterns.size()) - 1))];
    switch (mutation) {
      case 1: p.slots.insert(p.slots.begin() + gen.integer(0, static_cast<int>(p.slots.size())), PatternSlot{}); break;
      case 2: f.scene = gen.pick(std::vector<std::string>{"WETTER", "bewegung", "", "AUSDRUCK"}); break;
      case 3:
        for (auto& s : p.slots)
          if (s.binds) {
            s.binds = SlotRef{9, 1};
            break;
          }
        break;
      case 4:
        for (auto& s : p.slots)
          if (s.kind == SlotKind::preposition) s.text.clear();
        break;
      case 5: {
        auto refs = p.argument_slots();
        std::erase_if(f.slots, [&](const ArgumentSlot& a) { return a.ref == refs.front(); });
        break;
      }
      case 6: f.slots.push_back(f.slots.front()); break;
      case 7: p.arity = p.arity == Arity::mono ? Arity::bi : Arity::mono; break;
      case 8: f.slots.front().role.clear(); break;
      default: break;
    }
    json doc = base;
    json frame_doc;
    {
      Lexicon one;
      one.language = lex.language;
      one.frames = {f};
      frame_doc = lexicon_to_json(one)["frames"];
    }
    doc["frames"] = frame_doc;
    const bool valid = validate_frame(f).empty();
    bool loaded = true;
    try {
      parse_lexicon(doc);
    } catch (const Error&) {
      loaded = false;
    }
    CHECK_MESSAGE(loaded == valid, "mutation ", mutation, " on ", f.lemma);
    failures_seen += valid ? 0 : 1;
  }
  CHECK(failures_seen > 50);
}

TEST_CASE("property: serialize then reload is structurally identical") {
  for (Language l : kLanguages) {
    Lexicon lex = load_lexicon(valgen::testing::data_dir() / fmt::format("lexicon.{}.json", to_string(l)));
    json once = lexicon_to_json(lex);
    json twice = lexicon_to_json(parse_lexicon(once));
    CHECK(once == twice);
    CHECK(lex.frames.size() == 20);
  }
}

TEST_CASE("German entries always carry a case, Romance entries never do") {
  for (Language l : kLanguages) {
    Lexicon lex = load_lexicon(valgen::testing::data_dir() / fmt::format("lexicon.{}.json", to_string(l)));
    for (const auto& [id, e] : lex.entries) {
      if (e.pos != Pos::noun) continue;
      for (const auto& [key, form] : e.forms) {
        const bool has_case = key.find('.') != std::string::npos;
        CHECK_MESSAGE(has_case == (l == Language::de), id, " ", key);
      }
    }
  }
}

TEST_CASE("noun groups of a biargumental pattern") {
  Lexicon lex = lexicon_de();
  const auto* p = frame_of(lex, "Text").find_pattern("det+arg5c+head+gen+N1a");
  REQUIRE(p);
  GroupLayout g = layout_groups(*p);
  CHECK(g.problems.empty());
  REQUIRE(g.groups.size() == 2);
  CHECK(g.groups[0].group_case == Case::nom);
  CHECK(g.groups[1].group_case == Case::gen);
  CHECK(p->argument_slots() == std::vector<SlotRef>{{5, 2}, {1, 1}});
  CHECK(p->arity == Arity::bi);
}
