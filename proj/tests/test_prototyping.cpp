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
#include "valgen/error.hpp"
#include "valgen/prototyping.hpp"

using namespace valgen;
using valgen::testing::Gen;
using valgen::testing::reference_genitive_list;

namespace {

bool reference_mentions(const std::string& s) {
  static const std::string text = valgen::testing::reference_text();
  return text.find(s) != std::string::npos;
}

const SlotEvidence& evidence(const std::string& lemma, const std::string& file) {
  const FrameAnalysis& fa = valgen::testing::de().analysis(lemma);
  for (const auto& ev : fa.evidence)
    if (ev.table->name == file) return ev;
  FAIL("no evidence table ", file, " for ", lemma);
  throw std::logic_error("unreachable");
}

CooccurrenceTable table_from(const std::string& text) {
  std::istringstream in(text);
  return parse_frequency_table(in, "inline");
}

std::string header(long long corpus = 19807413543LL) {
  return fmt::format("# corpus_size_tokens={}\nrank\tfiller\tcount\tper_million\n", corpus);
}

}  // namespace

TEST_CASE("TEXT + genitive list: fixture reproduces the reference list row for row") {
  auto ref = reference_genitive_list();
  REQUIRE(ref.size() == 20);
  auto t = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/text_gen.tsv");
  REQUIRE(t.entries.size() >= 20);
  const auto& first = t.entries.front();
  CHECK(first.rank == 1);
  CHECK(first.filler == "Text die Lied");
  CHECK(first.lexeme == "Lied");
  CHECK(first.count == 1913);
  CHECK(first.published_per_million == doctest::Approx(0.09658));
  for (size_t i = 0; i < 20; ++i) {
    const auto& e = t.entries[i];
    CHECK(e.rank == ref[i].rank);
    CHECK(e.filler == ref[i].filler);
    CHECK(e.count == ref[i].count);
    REQUIRE(e.published_per_million.has_value());
    CHECK(*e.published_per_million == doctest::Approx(ref[i].per_million).epsilon(1e-9));
    // Independent recomputation from the declared corpus size.
    double recomputed = static_cast<double>(ref[i].count) / static_cast<double>(t.corpus_size_tokens) * 1e6;
    CHECK(std::abs(recomputed - ref[i].per_million) / ref[i].per_million < 0.01);
    CHECK(e.per_million == doctest::Approx(recomputed).epsilon(1e-12));
  }
  // The corpus size is the one implied by the first row.
  CHECK(static_cast<double>(t.corpus_size_tokens) == doctest::Approx(1913 / 0.09658 * 1e6).epsilon(1e-4));
}

TEST_CASE("frequency TSV edge cases") {
  CHECK(table_from(header()).entries.empty());
  CHECK_THROWS_AS(table_from(header() + "1\tText die Lied\t1913\t9.9\n"), InconsistentPerMillion);
  CHECK_THROWS_AS(table_from("rank\tfiller\tcount\tper_million\n1\tx\t3\t\n"), FormatError);
  CHECK_THROWS_AS(table_from(header() + "1\ta\t5\t\n1\tb\t4\t\n"), FormatError);
  CHECK_THROWS_AS(table_from(header() + "1\ta\t-5\t\n"), FormatError);
  CHECK_THROWS_AS(table_from(header() + "0\ta\t5\t\n"), FormatError);
  CHECK_THROWS_AS(table_from(header() + "1\ta\t5\t\n2\tb\t9\t\n"), FormatError);
  CHECK_THROWS_AS(table_from(header() + "1\ta\t5\n"), FormatError);
  CHECK_THROWS_AS(table_from("# corpus_size_tokens=0\n"), FormatError);
  auto t = table_from(header(1000000) + "1\tText die Lied\t7\t7.0\n");
  CHECK(t.entries[0].per_million == doctest::Approx(7.0));
}

TEST_CASE("filter_candidates on the TEXT + genitive list") {
  auto t = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/text_gen.tsv");
  const SlotRef agent{1, 1};

  SUBCASE("container readings are dropped, the author leads") {
    auto anns = parse_annotations(json::array({
        {{"filler", "Lied"}, {"verdict", "not_valency"}, {"note", "no agent"}},
        {{"filler", "Bibel"}, {"verdict", "not_valency"}},
        {{"filler", "Buch"}, {"verdict", "not_valency"}},
        {{"filler", "Autor"}, {"verdict", "valency_required"}, {"slot", "Arg1.1"}},
    }));
    auto out = filter_candidates(t, anns, agent);
    REQUIRE(out.size() == 1);
    CHECK(out[0].lexeme == "Autor");
    CHECK(out[0].rank == 4);
  }
  SUBCASE("excluded fillers never surface") {
    auto out = filter_candidates(t, valgen::testing::de().annotations.at("annotations/de/text_gen.json"), agent,
                                 &valgen::testing::de().ontology);
    REQUIRE_FALSE(out.empty());
    CHECK(out.front().lexeme == "Autor");
    for (const auto& c : out) {
      CHECK(c.lexeme != "Monat");
      CHECK(c.lexeme != "Jahr");
      CHECK(c.lexeme != "Lied");
    }
    // Candidates carry their ontology classes.
    const auto autor = std::find_if(out.begin(), out.end(), [](const auto& c) { return c.lexeme == "Autor"; });
    CHECK_FALSE(autor->classes.empty());
  }
  SUBCASE("no annotations") {
    CHECK(filter_candidates(t, {}, agent).empty());
    CHECK_THROWS_AS(filter_candidates(t, {}, agent, nullptr, FilterOptions{true, 20}), UnannotatedFiller);
  }
  SUBCASE("annotating a filler twice is an error") {
    CHECK_THROWS_AS(parse_annotations(json::array({{{"filler", "Lied"}, {"verdict", "not_valency"}},
                                                   {{"filler", "Lied"}, {"verdict", "excluded"}}})),
                    DuplicateId);
  }
}

TEST_CASE("property: the filter keeps exactly the annotated fillers, in table order") {
  auto t = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/text_gen.tsv");
  Gen gen(99);
  const std::vector<SlotRef> slots = {{1, 1}, {2, 1}};
  for (int trial = 0; trial < 100; ++trial) {
    json anns = json::array();
    std::set<std::string> want;
    const SlotRef slot = gen.pick(slots);
    std::set<std::string> seen;
    for (const auto& e : t.entries) {
      if (!seen.insert(e.lexeme).second) continue;
      int v = gen.integer(0, 3);
      if (v == 3) continue;
      json a = {{"filler", e.lexeme}, {"verdict", v == 0 ? "valency_required" : v == 1 ? "not_valency" : "excluded"}};
      if (v == 0) {
        SlotRef s = gen.pick(slots);
        a["slot"] = s.str();
        if (s == slot) want.insert(e.lexeme);
      }
      anns.push_back(a);
    }
    auto out = filter_candidates(t, parse_annotations(anns), slot);
    std::set<std::string> got;
    int last_rank = 0;
    for (const auto& c : out) {
      got.insert(c.lexeme);
      CHECK(c.rank > last_rank);
      last_rank = c.rank;
    }
    CHECK(got == want);
  }
}

TEST_CASE("pattern grades of the three worked cases") {
  // The transcribed numbers appear verbatim in the reference text.
  CHECK(reference_mentions("Diskussion über\t114,929"));
  CHECK(reference_mentions("körperlich Schmerz\t5,899"));
  CHECK(reference_mentions("seelisch Schmerz\t3,612"));
  CHECK(reference_mentions("107 Schmerz die Kopf\t21"));

  const auto& ueber = evidence("Diskussion", "diskussion_ueber.tsv");
  CHECK(ueber.table->pattern_count == 114929);
  CHECK(ueber.table->find_lexeme("Thema")->count == 5189);
  CHECK(ueber.grade.grade == PatternGrade::TypeI_prototypical);

  const auto& adj = evidence("Schmerz", "schmerz_adj.tsv");
  CHECK(adj.table->find_lexeme("körperlich")->rank == 5);
  CHECK(adj.table->find_lexeme("körperlich")->count == 5899);
  CHECK(adj.table->find_lexeme("seelisch")->rank == 10);
  CHECK(adj.grade.evidence.valency_share < 0.10);
  CHECK(adj.grade.grade == PatternGrade::TypeII_representative_rare);

  const auto& gen = evidence("Schmerz", "schmerz_gen.tsv");
  CHECK(gen.table->find_lexeme("Kopf")->count == 21);
  CHECK(gen.table->find_lexeme("Kopf")->per_million < 0.01);
  CHECK(gen.grade.grade == PatternGrade::Excluded);
}

TEST_CASE("grade_pattern thresholds") {
  Thresholds th;
  auto t = table_from(header(1000000) + "1\tX a\t100\t\n2\tX b\t50\t\n3\tX c\t10\t\n");
  std::vector<LexicalPrototype> c3 = {{"a", "X a", 1, 100}, {"b", "X b", 2, 50}, {"c", "X c", 3, 10}};
  CHECK(grade_pattern(t, c3, th).grade == PatternGrade::TypeII_representative_rare);
  th.diversity_min = 3;
  CHECK(grade_pattern(t, c3, th).grade == PatternGrade::TypeI_prototypical);
  th.freq_min = 1000;
  CHECK(grade_pattern(t, c3, th).grade == PatternGrade::TypeII_representative_rare);
  th.rank_window = 0;
  CHECK(grade_pattern(t, c3, th).grade == PatternGrade::Excluded);
  CHECK(grade_pattern(t, {}, Thresholds{}).grade == PatternGrade::Excluded);
}

TEST_CASE("property: more pattern hits never worsen a grade") {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 12);
    std::string body = header(1000000000);
    std::vector<LexicalPrototype> cands;
    long long count = gen.integer(1, 50000);
    int rank = 0;
    for (int i = 1; i <= n; ++i) {
      count = std::max<long long>(1, count - gen.integer(0, 5000));
      rank += gen.integer(1, 15);
      body += fmt::format("{}\tX w{}\t{}\t\n", rank, i, count);
      if (gen.coin(0.6)) cands.push_back({fmt::format("w{}", i), "", 0, count});
    }
    auto t = table_from(body);
    for (auto& c : cands) c.rank = t.find_lexeme(c.lexeme)->rank;
    PatternGrade prev = grade_pattern(t, cands).grade;
    for (long long total : {1000LL, 100000LL, 10000000LL, 1000000000LL}) {
      t.pattern_count = std::max(total, t.total_count());
      PatternGrade g = grade_pattern(t, cands).grade;
      CHECK(grade_rank(g) <= grade_rank(prev));
      prev = g;
    }
  }
}

TEST_CASE("class grades") {
  CHECK(reference_mentions("'Rückenschmerz'\tP.:2. 92363-mal"));
  const auto& compound = evidence("Schmerz", "schmerz_compound.tsv");
  CHECK(compound.table->find_lexeme("Kopf")->count == 188950);
  CHECK(compound.table->find_lexeme("Rücken")->count == 92363);
  CHECK(compound.table->find_lexeme("Bauch")->count == 45907);
  auto body = grade_class(ClassPath::parse("belebt.menschlich.körperteil"), compound.candidates, compound.grade.grade);
  CHECK(body.grade == ClassGrade::ManyRepresentatives_Frequent);

  // representative_count is the number of distinct candidates classified under the class.
  std::set<std::string> under;
  for (const auto& c : compound.candidates)
    for (const auto& p : c.classes)
      if (ClassPath::parse("belebt.menschlich.körperteil").is_prefix_of(p)) under.insert(c.lexeme);
  CHECK(body.representative_count == static_cast<int>(under.size()));

  const auto& farbe = evidence("Farbe", "farbe_gen.tsv");
  auto kosmetik = grade_class(ClassPath::parse("materiell.gegenstand.schönheitspflege.kosmetik"), farbe.candidates,
                              farbe.grade.grade);
  CHECK(kosmetik.representative_count == 1);
  CHECK(kosmetik.summed_count >= 1000);
  CHECK(kosmetik.grade == ClassGrade::FewRepresentatives_Frequent);

  LexicalPrototype lone{"x", "x", 1, 1, 0.0, {1, 1}, {ClassPath::parse("a.b")}};
  CHECK(grade_class(ClassPath::parse("a"), {lone}, PatternGrade::Excluded).grade == ClassGrade::Excluded);
}

TEST_CASE("contrast reports") {
  CHECK(reference_mentions("'Haar'\tP.: 38. 402-mal"));
  CHECK(reference_mentions("'Haar'\tP.: 263. 39-mal"));
  auto farbe = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/farbe_gen.tsv");
  auto schmerz = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/schmerz_compound.tsv");

  auto haar = contrast_report("Haar", farbe, schmerz);
  CHECK(haar.a.rank == 38);
  CHECK(haar.a.count == 402);
  CHECK(haar.b.rank == 263);
  CHECK(haar.b.count == 39);
  CHECK(haar.verdict == ContrastVerdict::prototypical_in_A_only);

  auto auge = contrast_report("Auge", farbe, schmerz);
  CHECK(auge.a.rank == 31);
  CHECK(auge.b.rank == 30);
  CHECK(auge.verdict == ContrastVerdict::both);

  CHECK_THROWS_AS(contrast_report("Zzz", farbe, schmerz), LexemeAbsent);
}

TEST_CASE("property: contrast verdicts mirror under swapping frames") {
  auto farbe = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/farbe_gen.tsv");
  auto schmerz = ingest_frequency_table(valgen::testing::data_dir() / "freq/de/schmerz_compound.tsv");
  auto mirror = [](ContrastVerdict v) {
    if (v == ContrastVerdict::prototypical_in_A_only) return ContrastVerdict::prototypical_in_B_only;
    if (v == ContrastVerdict::prototypical_in_B_only) return ContrastVerdict::prototypical_in_A_only;
    return v;
  };
  std::set<std::string> words;
  for (const auto& e : farbe.entries) words.insert(e.lexeme);
  for (const auto& e : schmerz.entries) words.insert(e.lexeme);
  for (const auto& w : words) {
    auto ab = contrast_report(w, farbe, schmerz);
    auto ba = contrast_report(w, schmerz, farbe);
    CHECK(ba.verdict == mirror(ab.verdict));
  }
}
