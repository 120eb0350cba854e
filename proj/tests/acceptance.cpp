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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>

#include "oracle.hpp"
#include "parity.hpp"
#include "support.hpp"
#include "valgen/embeddings.hpp"
#include "valgen/generation.hpp"
#include "valgen/morphology.hpp"
#include "valgen/prototyping.hpp"

using namespace valgen;
using namespace valgen::testing;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const SlotEvidence& evidence(const std::string& lemma, const std::string& file) {
  for (const auto& ev : de().analysis(lemma).evidence)
    if (ev.table->name == file) return ev;
  throw std::runtime_error("no evidence " + file);
}

Outcome ingestion() {
  auto ref = reference_genitive_list();
  auto t0 = Clock::now();
  auto t = ingest_frequency_table(data_dir() / "freq/de/text_gen.tsv");
  double ms = ms_since(t0);
  if (ref.size() != 20 || t.entries.size() < 20) return {false, "row count"};
  const auto& r1 = t.entries[0];
  bool ok = r1.rank == 1 && r1.filler == "Text die Lied" && r1.count == 1913 &&
            std::abs(r1.per_million - 0.09658) / 0.09658 < 0.01;
  double worst = 0;
  for (size_t i = 0; i < 20; ++i) {
    ok &= t.entries[i].filler == ref[i].filler && t.entries[i].count == ref[i].count;
    worst = std::max(worst, std::abs(t.entries[i].per_million - ref[i].per_million) / ref[i].per_million);
  }
  ok &= worst < 0.01 && ms < 1000;
  return {ok, fmt::format("rank 1 = {} {} {:.5f}/M, worst per-million deviation {:.4f}%, {:.1f} ms", r1.filler,
                          r1.count, r1.per_million, worst * 100, ms)};
}

Outcome grading() {
  const auto& ueber = evidence("Diskussion", "diskussion_ueber.tsv");
  const auto& adj = evidence("Schmerz", "schmerz_adj.tsv");
  const auto& gen = evidence("Schmerz", "schmerz_gen.tsv");
  bool koerperlich = false;
  for (const auto& c : adj.candidates) koerperlich |= c.lexeme == "körperlich" && c.rank == 5 && c.count == 5899;
  bool ok = ueber.table->pattern_count == 114929 && ueber.grade.grade == PatternGrade::TypeI_prototypical &&
            koerperlich && adj.grade.grade == PatternGrade::TypeII_representative_rare &&
            gen.table->find_lexeme("Kopf")->count == 21 && gen.grade.grade == PatternGrade::Excluded;
  return {ok, fmt::format("Diskussion+über {}, Adjektiv+Schmerz {} (non-valency share {:.1f}%), Schmerz+Genitiv {}",
                          to_string(ueber.grade.grade), to_string(adj.grade.grade),
                          100 * (1 - adj.grade.evidence.valency_share), to_string(gen.grade.grade))};
}

Outcome class_grading() {
  const auto& compound = evidence("Schmerz", "schmerz_compound.tsv");
  auto body = grade_class(ClassPath::parse("belebt.menschlich.körperteil"), compound.candidates, compound.grade.grade);
  const auto& farbe = evidence("Farbe", "farbe_gen.tsv");
  auto kosmetik = grade_class(ClassPath::parse("materiell.gegenstand.schönheitspflege.kosmetik"), farbe.candidates,
                              farbe.grade.grade);
  bool counts = compound.table->find_lexeme("Kopf")->count == 188950 &&
                compound.table->find_lexeme("Rücken")->count == 92363 &&
                compound.table->find_lexeme("Bauch")->count == 45907;
  bool ok = counts && body.grade == ClassGrade::ManyRepresentatives_Frequent &&
            kosmetik.grade == ClassGrade::FewRepresentatives_Frequent && kosmetik.representative_count == 1;
  return {ok, fmt::format("Körperteil {} ({} members), Kosmetik {} ({} member)", to_string(body.grade),
                          body.representative_count, to_string(kosmetik.grade), kosmetik.representative_count)};
}

Outcome contrast() {
  auto farbe = ingest_frequency_table(data_dir() / "freq/de/farbe_gen.tsv");
  auto schmerz = ingest_frequency_table(data_dir() / "freq/de/schmerz_compound.tsv");
  auto r = contrast_report("Haar", farbe, schmerz);
  bool ok = r.a.rank == 38 && r.a.count == 402 && r.b.rank == 263 && r.b.count == 39 &&
            r.verdict == ContrastVerdict::prototypical_in_A_only;
  return {ok, fmt::format("Haar: Farbe rank {} ({}), Schmerz rank {} ({}) -> {}", r.a.rank.value_or(-1),
                          r.a.count.value_or(-1), r.b.rank.value_or(-1), r.b.count.value_or(-1), to_string(r.verdict))};
}

Outcome fidelity() {
  const std::vector<std::string> expected = {
      "der Bemerkungstext der Akademikerin",           "die Lösungstexte des Gastprofessors",
      "der Antworttext der Englischlehrer",            "die Bemerkungstexte der Erzieher",
      "der Beschreibungstext der Englischlehrerinnen", "die Bemerkungstexte der Akademikerinnen",
      "der Ankündigungstext des Gastprofessors",       "die Erklärungstexte des Erziehers",
      "der Lösungstext des Dozenten"};
  GenerationRequest r;
  r.lemma = "Text";
  r.pattern_id = "det+arg5c+head+gen+N1a";
  r.packages = {{"a", {"Bemerkung-set"}}, {"b", {"belebt.menschlich.beruf.ausbildung"}}};
  auto count_hits = [&](int limit, size_t& produced, size_t& passing) {
    r.limit = limit;
    auto res = generate_bi(de(), r);
    std::set<std::string> got;
    const auto& pat = *de().analysis("Text").find_pattern(r.pattern_id)->pattern;
    produced = res.phrases.size();
    passing = 0;
    for (const auto& p : res.phrases) {
      got.insert(p.text);
      passing += agreement_recheck(pat, p.realization, de().lexicon).ok;
    }
    int hits = 0;
    for (const auto& p : expected) hits += static_cast<int>(got.count(p));
    return hits;
  };
  size_t produced = 0, passing = 0, p20 = 0, ok20 = 0;
  auto t0 = Clock::now();
  int hits = count_hits(100000, produced, passing);
  double ms = ms_since(t0);
  int hits20 = count_hits(20, p20, ok20);
  bool ok = hits >= 6 && passing == produced && ok20 == p20 && ms < 1000;
  return {ok, fmt::format("{}/9 reference phrases in the full cross product ({} phrases, {} pass the re-check, "
                          "{:.0f} ms); {}/9 within the default limit of 20",
                          hits, produced, passing, ms, hits20)};
}

Outcome oracle() {
  Gen g(424242);
  int n = 0, match = 0;
  while (n < 50) {
    auto req = random_request(g, store());
    if (!req) continue;
    const Bundle& b = store().bundle(req->language);
    match += project(generate(b, *req).phrases) == oracle_generate(b, *req);
    ++n;
  }
  return {match == n, fmt::format("{}/{} randomized requests equal the brute-force enumeration", match, n)};
}

Outcome morphology() {
  int realized = 0, passing = 0;
  bool covered = true;
  for (Language l : kLanguages) {
    const Lexicon& lx = store().bundle(l).lexicon;
    std::vector<std::string> nouns, linkable, adjectives;
    for (const auto& [id, e] : lx.entries) {
      (e.pos == Pos::adjective ? adjectives : nouns).push_back(id);
      if (e.compound_link) linkable.push_back(id);
    }
    std::set<std::string> used;
    for (const auto& f : lx.frames) {
      used.insert(f.inflection_ref);
      for (const auto& p : f.patterns) {
        auto refs = p.argument_slots();
        auto pool = [&](const SlotRef& r) -> const std::vector<std::string>& {
          for (const auto& s : p.slots)
            if (s.binds == r) {
              if (s.kind == SlotKind::compound_modifier) return linkable;
              return s.pos == Pos::adjective ? adjectives : nouns;
            }
          return nouns;
        };
        for (size_t vary = 0; vary < refs.size(); ++vary)
          for (const auto& cand : pool(refs[vary]))
            for (Number n : kNumbers) {
              Binding b;
              b.head = f.inflection_ref;
              for (size_t j = 0; j < refs.size(); ++j) {
                b.fillers[refs[j]] = j == vary ? cand : pool(refs[j]).front();
                b.numbers[refs[j]] = j == vary ? n : Number::sg;
              }
              for (size_t i = 0; i < p.slots.size(); ++i)
                if (p.slots[i].kind == SlotKind::adjective) {
                  const auto& a = adjectives[static_cast<size_t>(realized) % adjectives.size()];
                  b.adjectives[static_cast<int>(i)] = a;
                  used.insert(a);
                }
              ++realized;
              passing += agreement_recheck(p, realize_np(p, b, lx), lx).ok;
              used.insert(cand);
            }
      }
    }
    covered &= used.size() == lx.entries.size();
  }
  const auto& lx = de().lexicon;
  std::string a = compose_compound(*lx.find_entry("Bemerkung"), *lx.find_entry("Text")).lemma;
  std::string b = compose_compound(*lx.find_entry("Antwort"), *lx.find_entry("Text")).lemma;
  std::string c = compose_compound(*lx.find_entry("Kopf"), *lx.find_entry("Schmerz")).lemma;
  bool ok = passing == realized && covered && a == "Bemerkungstext" && b == "Antworttext" && c == "Kopfschmerz";
  return {ok, fmt::format("{}/{} realizations pass the re-check, every entry exercised: {}; compounds {} {} {}",
                          passing, realized, covered ? "yes" : "no", a, b, c)};
}

Outcome embeddings() {
  Gen gen(77);
  std::vector<std::string> vocab;
  for (int i = 0; i < 10; ++i) vocab.push_back(fmt::format("w{}", i));
  SkipGramModel m(vocab, 5, 3);
  for (auto& x : m.input()) x = gen.real(-1, 1);
  for (auto& x : m.output()) x = gen.real(-1, 1);
  std::vector<TrainingExample> ex;
  for (int i = 0; i < 25; ++i) {
    TrainingExample e{gen.integer(0, 9), gen.integer(0, 9), {}};
    for (int k = 0; k < 3; ++k) e.negatives.push_back(gen.integer(0, 9));
    ex.push_back(e);
  }
  std::vector<double> gi, go;
  m.gradient(ex, gi, go);
  const double h = 1e-5;
  double worst = 0;
  auto fd = [&](std::vector<double>& w, const std::vector<double>& g) {
    for (size_t i = 0; i < w.size(); ++i) {
      const double keep = w[i];
      w[i] = keep + h;
      const double up = m.loss(ex);
      w[i] = keep - h;
      const double down = m.loss(ex);
      w[i] = keep;
      const double num = (up - down) / (2 * h);
      const double scale = std::max(std::abs(num), std::abs(g[i]));
      if (scale > 1e-7) worst = std::max(worst, std::abs(num - g[i]) / scale);
    }
  };
  fd(m.input(), gi);
  fd(m.output(), go);

  const VectorStore& vs = *de().vectors;
  int sym_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& a = gen.pick(vs.words());
    const auto& b = gen.pick(vs.words());
    double ab = cosine(a, b, vs), ba = cosine(b, a, vs);
    sym_ok += ab == ba && ab >= -1.0 - 1e-12 && ab <= 1.0 + 1e-12;
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 200; ++i) pairs.emplace_back(gen.pick(vs.words()), gen.pick(vs.words()));
  int mono_ok = 0;
  for (int i = 0; i < 100; ++i) {
    double lo = gen.real(-1, 1), hi = gen.real(lo, 1);
    auto a = compatibility_filter(pairs, lo, vs);
    auto b = compatibility_filter(pairs, hi, vs);
    bool ok = true;
    for (size_t k = 0; k < pairs.size(); ++k)
      ok &= !(b[k].decision == Decision::accept && a[k].decision == Decision::reject);
    mono_ok += ok;
  }
  bool ok = worst < 1e-4 && sym_ok == 1000 && mono_ok == 100;
  return {ok, fmt::format("gradient relative error {:.2e}; cosine symmetric and bounded on {}/1000 pairs; "
                          "threshold monotone on {}/100 draws",
                          worst, sym_ok, mono_ok)};
}

Outcome export_stability() {
  const json body = json::parse(generate_body(R"(,"seed":9)"));
  Service s1(store());
  std::string j1 = s1.export_phrases(body, ExportFormat::json), c1 = s1.export_phrases(body, ExportFormat::csv);
  bool runs = s1.export_phrases(body, ExportFormat::json) == j1 && s1.export_phrases(body, ExportFormat::csv) == c1;
  DataStore again = DataStore::load(data_dir());
  Service s2(again);
  bool restart = s2.export_phrases(body, ExportFormat::json) == j1 && s2.export_phrases(body, ExportFormat::csv) == c1;
  auto rows = parse_csv(c1);
  auto arr = json::parse(j1);
  auto res = s1.generate(body);
  bool round = arr.size() == res["phrases"].size() && rows.size() == arr.size() + 1;
  for (size_t i = 0; round && i < arr.size(); ++i)
    round = arr[i]["text"] == res["phrases"][i]["text"] && arr[i]["pattern_id"] == res["phrases"][i]["pattern_id"] &&
            rows[i + 1][0] == arr[i]["text"].get<std::string>();
  return {runs && restart && round, fmt::format("{} phrases; identical across runs: {}, across restarts: {}; "
                                                "CSV parses and JSON round-trips: {}",
                                                arr.size(), runs, restart, round)};
}

Outcome parity() {
  TestServer server(store());
  auto cases = parity_matrix();
  int ok = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    auto r = run_parity_case(c, server, store());
    ok += r.ok;
    if (!r.ok && first_bad.empty()) first_bad = c.name + ": " + r.detail;
  }
  return {ok == static_cast<int>(cases.size()) && cases.size() >= 12,
          fmt::format("{}/{} cases agree{}", ok, cases.size(), first_bad.empty() ? "" : "; " + first_bad)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"frequency-table ingestion", ingestion},
      {"prototypicality grading", grading},
      {"class grading", class_grading},
      {"contrast report", contrast},
      {"generation fidelity", fidelity},
      {"oracle equivalence", oracle},
      {"morphology", morphology},
      {"embeddings", embeddings},
      {"export", export_stability},
      {"API/CLI parity", parity},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
