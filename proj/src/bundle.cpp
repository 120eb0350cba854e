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

#include "valgen/bundle.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "valgen/error.hpp"

namespace valgen {

std::string_view to_string(NumberPolicy p) {
  switch (p) {
    case NumberPolicy::sg:
      return "sg";
    case NumberPolicy::pl:
      return "pl";
    case NumberPolicy::both:
      return "both";
  }
  return "?";
}

std::optional<NumberPolicy> parse_number_policy(std::string_view s) {
  if (s == "sg") return NumberPolicy::sg;
  if (s == "pl") return NumberPolicy::pl;
  if (s == "both") return NumberPolicy::both;
  return std::nullopt;
}

std::vector<Number> numbers_of(NumberPolicy p) {
  switch (p) {
    case NumberPolicy::sg:
      return {Number::sg};
    case NumberPolicy::pl:
      return {Number::pl};
    case NumberPolicy::both:
      return {Number::sg, Number::pl};
  }
  return {};
}

long long SlotEvidence::frequency_of(const std::string& lexeme) const {
  auto it = frequency.find(lexeme);
  return it == frequency.end() ? 0 : it->second;
}

const PatternAnalysis* FrameAnalysis::find_pattern(std::string_view id) const {
  for (const auto& p : patterns)
    if (p.pattern->id == id) return &p;
  return nullptr;
}

const ValencyFrame& Bundle::frame(std::string_view lemma) const {
  const ValencyFrame* f = lexicon.find_frame(lemma);
  if (!f) throw UnknownFrame(fmt::format("unknown frame: {} ({})", lemma, to_string(language)));
  return *f;
}

const FrameAnalysis& Bundle::analysis(std::string_view lemma) const {
  auto it = analyses.find(std::string(lemma));
  if (it == analyses.end()) throw UnknownFrame(fmt::format("unknown frame: {} ({})", lemma, to_string(language)));
  return it->second;
}

namespace {

std::vector<std::string> string_list(const json& j, const char* key, const std::string& where) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_array()) throw SchemaError(fmt::format("{}: '{}' must be an array", where, key));
  for (const auto& x : *it) {
    if (!x.is_string()) throw SchemaError(fmt::format("{}: '{}' must hold strings", where, key));
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string required_string(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw SchemaError(fmt::format("{}: missing string field '{}'", where, key));
  return it->get<std::string>();
}

NumberPolicy number_field(const json& j, const std::string& where) {
  auto it = j.find("number");
  if (it == j.end()) return NumberPolicy::sg;
  auto p = it->is_string() ? parse_number_policy(it->get<std::string>()) : std::nullopt;
  if (!p) throw SchemaError(fmt::format("{}: 'number' must be sg, pl or both", where));
  return *p;
}

}  // namespace

FrameProfile parse_profile(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  FrameProfile p;
  p.lemma = required_string(j, "lemma", where);
  std::string w = fmt::format("{} {}", where, p.lemma);
  p.head_adjectives = string_list(j, "head_adjectives", w);
  p.filler_adjectives = string_list(j, "filler_adjectives", w);
  if (auto a = j.find("aliases"); a != j.end()) {
    if (!a->is_object()) throw SchemaError(w + ": 'aliases' must be an object");
    for (auto it = a->begin(); it != a->end(); ++it) {
      if (!it.value().is_string()) throw SchemaError(w + ": alias targets must be strings");
      p.aliases[it.key()] = ClassPath::parse(it.value().get<std::string>());
    }
  }
  if (auto e = j.find("exclude"); e != j.end()) {
    if (!e->is_object()) throw SchemaError(w + ": 'exclude' must be an object");
    for (auto it = e->begin(); it != e->end(); ++it) {
      auto members = string_list(*e, it.key().c_str(), w);
      p.exclude[ClassPath::parse(it.key())].insert(members.begin(), members.end());
    }
  }
  auto ev = j.find("evidence");
  if (ev == j.end() || !ev->is_array()) throw SchemaError(w + ": 'evidence' must be an array");
  for (size_t i = 0; i < ev->size(); ++i) {
    const json& x = (*ev)[i];
    std::string ew = fmt::format("{} evidence[{}]", w, i);
    if (!x.is_object()) throw SchemaError(ew + ": expected an object");
    EvidenceSpec s;
    s.patterns = string_list(x, "patterns", ew);
    if (s.patterns.empty()) throw SchemaError(ew + ": 'patterns' must be non-empty");
    auto slot = SlotRef::parse(required_string(x, "slot", ew));
    if (!slot) throw SchemaError(ew + ": invalid slot");
    s.slot = *slot;
    s.table = required_string(x, "table", ew);
    s.annotations = required_string(x, "annotations", ew);
    s.number = number_field(x, ew);
    if (auto pk = x.find("packages"); pk != x.end()) {
      if (!pk->is_array()) throw SchemaError(ew + ": 'packages' must be an array");
      std::vector<PackageDecl> decls;
      for (const auto& d : *pk) {
        if (!d.is_object()) throw SchemaError(ew + ": packages must be objects");
        PackageDecl pd;
        pd.cls = ClassPath::parse(required_string(d, "class", ew));
        pd.number = number_field(d, ew);
        pd.label = d.contains("label") && d["label"].is_string() ? d["label"].get<std::string>() : pd.cls.str();
        pd.head_adjectives = string_list(d, "head_adjectives", ew);
        pd.filler_adjectives = string_list(d, "filler_adjectives", ew);
        decls.push_back(std::move(pd));
      }
      s.packages = std::move(decls);
    }
    p.evidence.push_back(std::move(s));
  }
  return p;
}

namespace {

// What a slot accepts, judged from the patterns that realize it.
struct SlotDemand {
  bool compound = false;
  Pos pos = Pos::noun;
};

SlotDemand demand_of(const ValencyFrame& frame, const EvidenceSpec& spec) {
  SlotDemand d;
  for (const auto& pid : spec.patterns) {
    const RealizationPattern* p = frame.find_pattern(pid);
    if (!p) continue;
    for (const auto& s : p->slots) {
      if (!s.binds_argument() || *s.binds != spec.slot) continue;
      if (s.kind == SlotKind::compound_modifier) d.compound = true;
      else d.pos = s.pos;
    }
  }
  return d;
}

bool accepts(const SlotDemand& d, const LexicalEntry* e) {
  if (!e) return false;
  if (d.compound) return e->pos == Pos::noun && e->compound_link.has_value();
  return e->pos == d.pos;
}

void check_adjectives(const Lexicon& lex, const std::vector<std::string>& ids, const std::string& where) {
  for (const auto& a : ids) {
    const LexicalEntry* e = lex.find_entry(a);
    if (!e || e->pos != Pos::adjective)
      throw DanglingReference(fmt::format("{}: adjective {} has no entry", where, a));
  }
}

FrameAnalysis analyse(const Bundle& b, const ValencyFrame& frame, const FrameProfile* profile,
                      const Thresholds& config) {
  FrameAnalysis fa;
  fa.frame = &frame;
  fa.profile = profile;
  if (profile) {
    for (const auto& spec : profile->evidence) {
      SlotEvidence ev;
      ev.spec = &spec;
      ev.table = &b.tables.at(spec.table);
      ev.candidates = filter_candidates(*ev.table, b.annotations.at(spec.annotations), spec.slot, &b.ontology);
      ev.grade = grade_pattern(*ev.table, ev.candidates, config);
      for (const auto& c : ev.candidates) ev.frequency[c.lexeme] += c.count;

      std::vector<PackageDecl> decls;
      if (spec.packages) {
        decls = *spec.packages;
      } else {
        std::set<ClassPath> seen;
        for (const auto& c : ev.candidates)
          for (const auto& cls : c.classes)
            if (seen.insert(cls).second) decls.push_back({cls, spec.number, cls.str(), {}, {}});
      }
      const SlotDemand demand = demand_of(frame, spec);
      for (const auto& d : decls) {
        PackageInfo pk;
        pk.cls = d.cls;
        pk.label = d.label;
        pk.number = d.number;
        pk.head_adjectives = d.head_adjectives;
        pk.filler_adjectives = d.filler_adjectives;
        pk.grade = grade_class(d.cls, ev.candidates, ev.grade.grade, config);
        for (const auto& m : expand_class(d.cls, b.ontology, &ev.frequency)) {
          bool excluded = false;
          for (const auto& [ex_cls, lexemes] : profile->exclude)
            if ((ex_cls.is_prefix_of(d.cls) || d.cls.is_prefix_of(ex_cls)) && lexemes.count(m)) excluded = true;
          if (!excluded && accepts(demand, b.lexicon.find_entry(m))) pk.members.push_back(m);
        }
        ev.packages.push_back(std::move(pk));
      }
      std::stable_sort(ev.packages.begin(), ev.packages.end(), [](const PackageInfo& x, const PackageInfo& y) {
        if (x.grade.grade != y.grade.grade) return x.grade.grade < y.grade.grade;
        if (x.grade.summed_count != y.grade.summed_count) return x.grade.summed_count > y.grade.summed_count;
        return x.cls < y.cls;
      });
      fa.evidence.push_back(std::move(ev));
    }
  }
  for (const auto& p : frame.patterns) {
    PatternAnalysis pa;
    pa.pattern = &p;
    pa.slots = p.argument_slots();
    bool complete = !pa.slots.empty();
    int worst = grade_rank(PatternGrade::TypeI_prototypical);
    for (const auto& ref : pa.slots) {
      bool found = false;
      for (size_t i = 0; i < fa.evidence.size() && !found; ++i) {
        const auto& spec = *fa.evidence[i].spec;
        if (spec.slot == ref && std::find(spec.patterns.begin(), spec.patterns.end(), p.id) != spec.patterns.end()) {
          pa.evidence[ref] = i;
          worst = std::max(worst, grade_rank(fa.evidence[i].grade.grade));
          found = true;
        }
      }
      complete = complete && found;
    }
    pa.grade = complete ? static_cast<PatternGrade>(worst) : PatternGrade::Excluded;
    fa.patterns.push_back(std::move(pa));
  }
  return fa;
}

}  // namespace

Bundle load_bundle(const std::filesystem::path& dir, Language lang, const Thresholds& config) {
  const std::string code(to_string(lang));
  Bundle b;
  b.language = lang;
  b.lexicon = load_lexicon(dir / fmt::format("lexicon.{}.json", code));
  if (b.lexicon.language != lang)
    throw SchemaError(fmt::format("lexicon.{}.json declares language {}", code, to_string(b.lexicon.language)));
  b.ontology = load_ontology(dir / fmt::format("ontology.{}.json", code));
  if (b.ontology.language() && *b.ontology.language() != lang)
    throw SchemaError(fmt::format("ontology.{}.json declares another language", code));
  for (const auto& [path, node] : b.ontology.nodes())
    for (const auto& m : node.members)
      if (!b.lexicon.find_entry(m))
        throw DanglingReference(fmt::format("ontology {}: member {} has no lexicon entry", path.str(), m));

  auto profiles_path = dir / fmt::format("profiles.{}.json", code);
  if (std::filesystem::exists(profiles_path)) {
    json doc = read_json_file(profiles_path);
    if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array())
      throw SchemaError(profiles_path.filename().string() + ": 'frames' must be an array");
    for (const auto& pj : doc["frames"]) {
      FrameProfile p = parse_profile(pj, profiles_path.filename().string());
      const ValencyFrame* frame = b.lexicon.find_frame(p.lemma);
      std::string where = fmt::format("profile {}", p.lemma);
      if (!frame) throw DanglingReference(where + ": no such frame");
      check_adjectives(b.lexicon, p.head_adjectives, where);
      check_adjectives(b.lexicon, p.filler_adjectives, where);
      for (const auto& [alias, cls] : p.aliases)
        if (!b.ontology.contains(cls)) throw DanglingReference(fmt::format("{}: alias {} names unknown class", where, alias));
      for (const auto& spec : p.evidence) {
        if (!frame->find_slot(spec.slot))
          throw DanglingReference(fmt::format("{}: unknown slot {}", where, spec.slot.str()));
        for (const auto& pid : spec.patterns)
          if (!frame->find_pattern(pid)) throw DanglingReference(fmt::format("{}: unknown pattern {}", where, pid));
        if (spec.packages)
          for (const auto& d : *spec.packages) {
            if (!b.ontology.contains(d.cls))
              throw DanglingReference(fmt::format("{}: package class {} not in the ontology", where, d.cls.str()));
            check_adjectives(b.lexicon, d.head_adjectives, where);
            check_adjectives(b.lexicon, d.filler_adjectives, where);
          }
        if (!b.tables.count(spec.table))
          b.tables.emplace(spec.table, ingest_frequency_table(dir / spec.table, FrameKey{lang, p.lemma}));
        if (!b.annotations.count(spec.annotations))
          b.annotations.emplace(spec.annotations, load_annotations(dir / spec.annotations));
      }
      std::string lemma = p.lemma;
      if (!b.profiles.emplace(lemma, std::move(p)).second)
        throw DuplicateId(fmt::format("profile {}: duplicate", lemma));
    }
  }

  auto vectors_path = dir / fmt::format("vectors.{}.txt", code);
  if (std::filesystem::exists(vectors_path)) b.vectors = load_vectors(vectors_path);

  for (const auto& frame : b.lexicon.frames) {
    auto it = b.profiles.find(frame.lemma);
    b.analyses.emplace(frame.lemma, analyse(b, frame, it == b.profiles.end() ? nullptr : &it->second, config));
  }
  spdlog::debug("loaded {}: {} frames, {} entries, {} classes, {} tables", code, b.lexicon.frames.size(),
                b.lexicon.entries.size(), b.ontology.nodes().size(), b.tables.size());
  return b;
}

DataStore DataStore::load(const std::filesystem::path& dir, const Thresholds& config) {
  DataStore ds;
  ds.dir_ = dir;
  ds.thresholds_ = config;
  for (Language lang : kLanguages) {
    if (!std::filesystem::exists(dir / fmt::format("lexicon.{}.json", to_string(lang)))) continue;
    ds.bundles_.emplace(lang, load_bundle(dir, lang, config));
  }
  if (ds.bundles_.empty()) throw SchemaError(fmt::format("{}: no language bundle found", dir.string()));
  return ds;
}

const Bundle& DataStore::bundle(Language lang) const {
  auto it = bundles_.find(lang);
  if (it == bundles_.end()) throw UnknownLanguage(fmt::format("unknown language: {}", to_string(lang)));
  return it->second;
}

const Bundle& DataStore::bundle(std::string_view code) const {
  auto lang = parse_language(code);
  if (!lang) throw UnknownLanguage(fmt::format("unknown language: {}", code));
  return bundle(*lang);
}

std::vector<Language> DataStore::languages() const {
  std::vector<Language> out;
  for (const auto& [l, b] : bundles_) out.push_back(l);
  return out;
}

std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("VALGEN_DATA_DIR"); env && *env) return env;
  return "data";
}

}  // namespace valgen
