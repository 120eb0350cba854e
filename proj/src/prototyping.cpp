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

#include "valgen/prototyping.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "valgen/error.hpp"

namespace valgen {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

template <typename T>
bool parse_int(std::string_view s, T& v) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_double(const std::string& s, double& v) {
  if (s.empty()) return false;
  try {
    size_t used = 0;
    v = std::stod(s, &used);
    return used == s.size() && std::isfinite(v);
  } catch (const std::exception&) {
    return false;
  }
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::string pick_token(const std::string& filler, LexemeToken which) {
  std::istringstream ss(filler);
  std::vector<std::string> toks;
  for (std::string t; ss >> t;) toks.push_back(t);
  if (toks.empty()) return filler;
  return which == LexemeToken::first ? toks.front() : toks.back();
}

}  // namespace

double per_million(long long count, long long corpus_size) {
  return static_cast<double>(count) / static_cast<double>(corpus_size) * 1e6;
}

long long CooccurrenceTable::total_count() const {
  long long s = 0;
  for (const auto& e : entries) s += e.count;
  return s;
}

double CooccurrenceTable::pattern_per_million() const {
  return per_million(pattern_count.value_or(total_count()), corpus_size_tokens);
}

const CooccurrenceEntry* CooccurrenceTable::find_lexeme(std::string_view lexeme) const {
  for (const auto& e : entries)
    if (e.lexeme == lexeme) return &e;
  return nullptr;
}

CooccurrenceTable parse_frequency_table(std::istream& in, const std::string& name, FrameKey frame) {
  CooccurrenceTable t;
  t.name = name;
  t.frame = std::move(frame);
  bool have_corpus = false;
  bool have_lexeme_col = false;
  bool header_seen = false;
  std::set<int> ranks;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line(trim_cr(raw));
    auto where = [&]() { return fmt::format("{}:{}", name, lineno); };
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto body = line.substr(1);
      body.erase(0, body.find_first_not_of(' '));
      auto eq = body.find('=');
      if (eq == std::string::npos) continue;  // free-form note
      auto key = body.substr(0, eq), value = body.substr(eq + 1);
      if (key == "corpus_size_tokens") {
        if (!parse_int(value, t.corpus_size_tokens) || t.corpus_size_tokens <= 0)
          throw FormatError(fmt::format("{}: corpus_size_tokens must be a positive integer", where()));
        have_corpus = true;
      } else if (key == "pattern_count") {
        long long v = 0;
        if (!parse_int(value, v) || v < 0)
          throw FormatError(fmt::format("{}: pattern_count must be a non-negative integer", where()));
        t.pattern_count = v;
      } else if (key == "lexeme_token") {
        if (value == "first") t.lexeme_token = LexemeToken::first;
        else if (value == "last") t.lexeme_token = LexemeToken::last;
        else throw FormatError(fmt::format("{}: lexeme_token must be first or last", where()));
      }
      continue;
    }
    auto cells = split(line, '\t');
    if (!header_seen && cells.size() >= 4 && cells[0] == "rank") {
      if (cells[1] != "filler" || cells[2] != "count" || cells[3] != "per_million" ||
          (cells.size() == 5 && cells[4] != "lexeme") || cells.size() > 5)
        throw FormatError(fmt::format("{}: unexpected column header", where()));
      have_lexeme_col = cells.size() == 5;
      header_seen = true;
      continue;
    }
    header_seen = true;
    if (!have_corpus) throw FormatError(fmt::format("{}: missing corpus_size_tokens header", where()));
    if (cells.size() != 4 && cells.size() != 5)
      throw FormatError(fmt::format("{}: expected 4 or 5 tab-separated fields, got {}", where(), cells.size()));
    CooccurrenceEntry e;
    if (!parse_int(cells[0], e.rank) || e.rank < 1)
      throw FormatError(fmt::format("{}: rank must be an integer >= 1", where()));
    if (!ranks.insert(e.rank).second) throw FormatError(fmt::format("{}: duplicate rank {}", where(), e.rank));
    e.filler = cells[1];
    if (e.filler.empty()) throw FormatError(fmt::format("{}: empty filler", where()));
    if (!parse_int(cells[2], e.count) || e.count < 0)
      throw FormatError(fmt::format("{}: count must be a non-negative integer", where()));
    e.per_million = per_million(e.count, t.corpus_size_tokens);
    if (!cells[3].empty()) {
      double pm = 0.0;
      if (!parse_double(cells[3], pm) || pm < 0)
        throw FormatError(fmt::format("{}: per_million must be a non-negative number", where()));
      double denom = std::max(e.per_million, 1e-300);
      if (std::abs(pm - e.per_million) / denom > 0.01)
        throw InconsistentPerMillion(fmt::format("{}: per_million {} disagrees with count {} (expected {:.5f})",
                                                 where(), cells[3], e.count, e.per_million));
      e.published_per_million = pm;
    }
    if (cells.size() == 5 && !have_lexeme_col)
      throw FormatError(fmt::format("{}: lexeme cell without a lexeme column", where()));
    e.lexeme = cells.size() == 5 && !cells[4].empty() ? cells[4] : pick_token(e.filler, t.lexeme_token);
    t.entries.push_back(std::move(e));
  }
  if (!have_corpus) throw FormatError(fmt::format("{}: missing corpus_size_tokens header", name));
  std::sort(t.entries.begin(), t.entries.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
  for (size_t i = 1; i < t.entries.size(); ++i)
    if (t.entries[i].count > t.entries[i - 1].count)
      throw FormatError(fmt::format("{}: rank {} has a larger count than rank {}", name, t.entries[i].rank,
                                    t.entries[i - 1].rank));
  return t;
}

CooccurrenceTable ingest_frequency_table(const std::filesystem::path& path, FrameKey frame) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(fmt::format("cannot open {}", path.string()));
  return parse_frequency_table(in, path.filename().string(), std::move(frame));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::valency_required:
      return "valency_required";
    case Verdict::not_valency:
      return "not_valency";
    case Verdict::excluded:
      return "excluded";
  }
  return "?";
}

std::vector<RoleAnnotation> parse_annotations(const json& doc, const std::string& where) {
  if (!doc.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<RoleAnnotation> out;
  std::set<std::string> seen;
  for (size_t i = 0; i < doc.size(); ++i) {
    const json& a = doc[i];
    std::string w = fmt::format("{}[{}]", where, i);
    if (!a.is_object() || !a.contains("filler") || !a["filler"].is_string() || !a.contains("verdict") ||
        !a["verdict"].is_string())
      throw SchemaError(w + ": needs string fields 'filler' and 'verdict'");
    RoleAnnotation r;
    r.filler = a["filler"].get<std::string>();
    auto v = a["verdict"].get<std::string>();
    if (v == "valency_required") r.verdict = Verdict::valency_required;
    else if (v == "not_valency") r.verdict = Verdict::not_valency;
    else if (v == "excluded") r.verdict = Verdict::excluded;
    else throw SchemaError(fmt::format("{}: unknown verdict '{}'", w, v));
    if (auto s = a.find("slot"); s != a.end() && !s->is_null()) {
      if (!s->is_string() || !(r.slot = SlotRef::parse(s->get<std::string>())))
        throw SchemaError(w + ": invalid slot");
    }
    if (r.verdict == Verdict::valency_required && !r.slot)
      throw SchemaError(w + ": valency_required needs a slot");
    if (auto n = a.find("note"); n != a.end() && n->is_string()) r.note = n->get<std::string>();
    if (!seen.insert(r.filler).second)
      throw DuplicateId(fmt::format("{}: filler {} annotated twice", where, r.filler));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RoleAnnotation> load_annotations(const std::filesystem::path& path) {
  return parse_annotations(read_json_file(path), path.filename().string());
}

std::vector<LexicalPrototype> filter_candidates(const CooccurrenceTable& table,
                                                const std::vector<RoleAnnotation>& annotations,
                                                const SlotRef& slot, const Ontology* onto, FilterOptions options) {
  std::map<std::string, const RoleAnnotation*> by_filler;
  for (const auto& a : annotations) by_filler.emplace(a.filler, &a);
  std::vector<LexicalPrototype> out;
  for (const auto& e : table.entries) {
    auto it = by_filler.find(e.lexeme);
    if (it == by_filler.end()) it = by_filler.find(e.filler);
    if (it == by_filler.end()) {
      if (options.strict && e.rank <= options.top_k)
        throw UnannotatedFiller(fmt::format("{}: filler '{}' at rank {} has no annotation", table.name, e.filler,
                                            e.rank));
      continue;
    }
    const RoleAnnotation& a = *it->second;
    if (a.verdict != Verdict::valency_required || a.slot != slot) continue;
    LexicalPrototype p;
    p.lexeme = e.lexeme;
    p.filler = e.filler;
    p.rank = e.rank;
    p.count = e.count;
    p.per_million = e.per_million;
    p.slot = slot;
    if (onto) p.classes = classify_lexeme(e.lexeme, *onto);
    out.push_back(std::move(p));
  }
  return out;
}

std::string_view to_string(PatternGrade g) {
  switch (g) {
    case PatternGrade::TypeI_prototypical:
      return "TypeI_prototypical";
    case PatternGrade::TypeII_representative_rare:
      return "TypeII_representative_rare";
    case PatternGrade::Excluded:
      return "Excluded";
  }
  return "?";
}

int grade_rank(PatternGrade g) { return static_cast<int>(g); }

PrototypicalityGrade grade_pattern(const CooccurrenceTable& table, const std::vector<LexicalPrototype>& candidates,
                                   const Thresholds& config) {
  PrototypicalityGrade g;
  std::set<std::string> distinct;
  long long candidate_hits = 0;
  bool in_window = false;
  for (const auto& c : candidates) {
    distinct.insert(c.lexeme);
    candidate_hits += c.count;
    if (c.rank <= config.rank_window) in_window = true;
  }
  g.evidence.pattern_per_million = table.pattern_per_million();
  g.evidence.distinct_candidates = static_cast<int>(distinct.size());
  long long total = table.total_count();
  g.evidence.valency_share = total > 0 ? static_cast<double>(candidate_hits) / static_cast<double>(total) : 0.0;

  if (g.evidence.pattern_per_million >= config.freq_min && g.evidence.distinct_candidates >= config.diversity_min)
    g.grade = PatternGrade::TypeI_prototypical;
  else if (in_window)
    g.grade = PatternGrade::TypeII_representative_rare;
  else
    g.grade = PatternGrade::Excluded;
  return g;
}

std::string_view to_string(ClassGrade g) {
  switch (g) {
    case ClassGrade::ManyRepresentatives_Frequent:
      return "ManyRepresentatives_Frequent";
    case ClassGrade::FewRepresentatives_Frequent:
      return "FewRepresentatives_Frequent";
    case ClassGrade::Excluded:
      return "Excluded";
  }
  return "?";
}

ClassPrototypicality grade_class(const ClassPath& cls, const std::vector<LexicalPrototype>& candidates,
                                 PatternGrade pattern_grade, const Thresholds& config) {
  ClassPrototypicality c;
  c.cls = cls;
  std::set<std::string> reps;
  for (const auto& p : candidates) {
    bool under = std::any_of(p.classes.begin(), p.classes.end(),
                             [&](const ClassPath& q) { return cls.is_prefix_of(q); });
    if (under && reps.insert(p.lexeme).second) c.summed_count += p.count;
  }
  c.representative_count = static_cast<int>(reps.size());
  if (c.representative_count >= config.class_members_min && pattern_grade != PatternGrade::Excluded)
    c.grade = ClassGrade::ManyRepresentatives_Frequent;
  else if (c.representative_count < config.class_members_min && c.summed_count >= config.class_freq_min)
    c.grade = ClassGrade::FewRepresentatives_Frequent;
  else
    c.grade = ClassGrade::Excluded;
  return c;
}

std::string_view to_string(ContrastVerdict v) {
  switch (v) {
    case ContrastVerdict::prototypical_in_A_only:
      return "prototypical_in_A_only";
    case ContrastVerdict::prototypical_in_B_only:
      return "prototypical_in_B_only";
    case ContrastVerdict::both:
      return "both";
    case ContrastVerdict::neither:
      return "neither";
  }
  return "?";
}

bool filler_prototypical(const CooccurrenceEntry& e, const Thresholds& config) {
  return e.rank <= config.rank_window || e.per_million >= config.lexeme_pm_min;
}

ContrastReport contrast_report(const std::string& lexeme, const CooccurrenceTable& a, const CooccurrenceTable& b,
                               const Thresholds& config) {
  ContrastReport r;
  r.lexeme = lexeme;
  auto side = [&](const CooccurrenceTable& t) {
    ContrastSide s;
    s.table = t.name;
    if (const auto* e = t.find_lexeme(lexeme)) {
      s.rank = e->rank;
      s.count = e->count;
      s.per_million = e->per_million;
      s.prototypical = filler_prototypical(*e, config);
    }
    return s;
  };
  r.a = side(a);
  r.b = side(b);
  if (!r.a.rank && !r.b.rank) throw LexemeAbsent(fmt::format("lexeme {} appears in neither table", lexeme));
  if (r.a.prototypical && r.b.prototypical) r.verdict = ContrastVerdict::both;
  else if (r.a.prototypical) r.verdict = ContrastVerdict::prototypical_in_A_only;
  else if (r.b.prototypical) r.verdict = ContrastVerdict::prototypical_in_B_only;
  else r.verdict = ContrastVerdict::neither;
  return r;
}

json to_json(const PrototypicalityGrade& g) {
  return {{"grade", to_string(g.grade)},
          {"evidence",
           {{"pattern_per_million", g.evidence.pattern_per_million},
            {"distinct_candidates", g.evidence.distinct_candidates},
            {"valency_share", g.evidence.valency_share}}}};
}

json to_json(const ClassPrototypicality& c) {
  return {{"class", c.cls.str()},
          {"grade", to_string(c.grade)},
          {"representative_count", c.representative_count},
          {"summed_count", c.summed_count}};
}

json to_json(const ContrastReport& r) {
  auto side = [](const ContrastSide& s) {
    json j = {{"table", s.table}, {"prototypical", s.prototypical}};
    j["rank"] = s.rank ? json(*s.rank) : json(nullptr);
    j["count"] = s.count ? json(*s.count) : json(nullptr);
    j["per_million"] = s.per_million ? json(*s.per_million) : json(nullptr);
    return j;
  };
  return {{"lexeme", r.lexeme}, {"a", side(r.a)}, {"b", side(r.b)}, {"verdict", to_string(r.verdict)}};
}

}  // namespace valgen
