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

#include <cmath>
#include <set>

#include "support.hpp"
#include "valgen/embeddings.hpp"
#include "valgen/error.hpp"

using namespace valgen;
using valgen::testing::Gen;

namespace {

VectorStore from_text(const std::string& s) {
  std::istringstream in(s);
  return parse_vectors(in);
}

double dot_oracle(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    d += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return d / std::sqrt(na * nb);
}

Corpus corpus_of(const std::string& text) {
  std::istringstream in(text);
  return read_corpus(in);
}

}  // namespace

TEST_CASE("loading the fixture store") {
  auto s = load_vectors(valgen::testing::data_dir() / "vectors.de.txt");
  CHECK(s.dimension() == 50);
  CHECK(s.size() == 233);
  CHECK(s.contains("Bundesregierung"));
}

TEST_CASE("vector file errors") {
  CHECK_THROWS_AS(from_text("1 3\nAutor 1 2\n"), DimensionMismatch);
  CHECK_THROWS_AS(from_text("2 2\nAutor 1 2\nAutor 3 4\n"), DuplicateWord);
  CHECK_THROWS_AS(from_text("1 2\nAutor 0 0\n"), ZeroVector);
  CHECK_THROWS_AS(from_text("3 2\nAutor 1 2\n"), FormatError);
  CHECK_THROWS_AS(from_text("1 1\nAutor 1\n"), FormatError);
  CHECK_THROWS_AS(from_text("1 2\nAutor 1 x\n"), FormatError);
  CHECK_THROWS_AS(from_text(""), FormatError);
}

TEST_CASE("write then parse is lossless at six decimals") {
  auto s = from_text("2 3\nKopf 0.5 -0.25 1\nHaar 1e-3 2 3\n");
  std::ostringstream out;
  write_vectors(s, out);
  CHECK(out.str() == "2 3\nKopf 0.500000 -0.250000 1.000000\nHaar 0.001000 2.000000 3.000000\n");
  auto back = from_text(out.str());
  CHECK(back.words() == s.words());
}

TEST_CASE("cosine") {
  auto s = from_text("4 2\nx 1 0\ny 0 1\nz -1 0\nw 3 4\n");
  CHECK(cosine("w", "w", s) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cosine("x", "y", s) == doctest::Approx(0.0));
  CHECK(cosine("x", "z", s) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cosine("x", "nope", s), MissingVector);
}

TEST_CASE("property: cosine matches a dot-product oracle, is symmetric and bounded") {
  auto s = load_vectors(valgen::testing::data_dir() / "vectors.de.txt");
  Gen gen(1234);
  for (int i = 0; i < 1000; ++i) {
    const std::string& a = gen.pick(s.words());
    const std::string& b = gen.pick(s.words());
    double ab = cosine(a, b, s);
    CHECK(ab == doctest::Approx(dot_oracle(*s.find(a), *s.find(b))).epsilon(1e-12));
    CHECK(ab == cosine(b, a, s));
    CHECK(ab >= -1.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("nearest_neighbors") {
  auto s = from_text("4 2\na 1 0\nb 0.9 0.1\nc 0.9 0.1\nd -1 0\n");
  auto all = nearest_neighbors("a", 10, s);
  REQUIRE(all.size() == 3);
  CHECK(all[0].first == "b");  // tie with c, lexicographic
  CHECK(all[1].first == "c");
  CHECK(all[2].first == "d");
  CHECK_THROWS_AS(nearest_neighbors("q", 1, s), MissingVector);
  CHECK_THROWS_AS(nearest_neighbors("a", 0, s), PreconditionViolation);

  Gen gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    VectorStore t(3);
    for (const char* w : {"p", "q", "r"}) t.add(w, {gen.real(-1, 1), gen.real(-1, 1), gen.real(0.1, 1)});
    std::string best;
    double best_sim = -2;
    for (const char* w : {"q", "r"}) {
      double sim = dot_oracle(*t.find("p"), *t.find(w));
      if (sim > best_sim) best_sim = sim, best = w;
    }
    auto nn = nearest_neighbors("p", 1, t);
    REQUIRE(nn.size() == 1);
    CHECK(nn[0].first == best);
  }
}

TEST_CASE("compatibility_filter") {
  // cos((1,0),(0.6,0.8)) = 0.6 by construction.
  VectorStore s(2);
  s.add("Bundesregierung", {1, 0});
  s.add("Anfrage", {0.6, 0.8});
  s.add("Lippenstift", {-1, 0.1});
  REQUIRE(dot_oracle(*s.find("Bundesregierung"), *s.find("Anfrage")) == doctest::Approx(0.6));
  auto v = compatibility_filter({{"Bundesregierung", "Anfrage"}}, 0.3, s);
  REQUIRE(v.size() == 1);
  CHECK(v[0].decision == Decision::accept);
  CHECK(*v[0].similarity == doctest::Approx(0.6));

  auto all = compatibility_filter({{"Bundesregierung", "Lippenstift"}, {"Anfrage", "Lippenstift"}}, -1.0, s);
  for (const auto& x : all) CHECK(x.decision == Decision::accept);

  auto missing = compatibility_filter({{"Bundesregierung", "Zzz"}}, 0.9, s);
  CHECK(missing[0].decision == Decision::unscored_accept);
  CHECK_FALSE(missing[0].similarity.has_value());

  CHECK_THROWS_AS(compatibility_filter({}, 1.0 + 1e-9, s), PreconditionViolation);
  CHECK_THROWS_AS(compatibility_filter({}, -1.0 - 1e-9, s), PreconditionViolation);
  CHECK(compatibility_filter({{"Bundesregierung", "Anfrage"}}, 1.0, s)[0].decision == Decision::reject);
}

TEST_CASE("property: a higher threshold rejects a superset") {
  auto s = load_vectors(valgen::testing::data_dir() / "vectors.de.txt");
  Gen gen(77);
  std::vector<std::string> words = s.words();
  words.push_back("Unbekannt");
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < 30; ++i) pairs.emplace_back(gen.pick(words), gen.pick(words));
    double t1 = gen.real(-1, 1), t2 = gen.real(t1, 1);
    auto a = compatibility_filter(pairs, t1, s);
    auto b = compatibility_filter(pairs, t2, s);
    REQUIRE(a.size() == pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
      CHECK(a[i].a == pairs[i].first);
      if (a[i].decision == Decision::reject) CHECK(b[i].decision == Decision::reject);
      CHECK((a[i].decision == Decision::reject) == (a[i].similarity && *a[i].similarity < t1));
    }
  }
}

TEST_CASE("skip-gram gradient matches central finite differences") {
  Gen gen(2024);
  std::vector<std::string> vocab;
  for (int i = 0; i < 10; ++i) vocab.push_back(fmt::format("w{}", i));
  for (int trial = 0; trial < 5; ++trial) {
    SkipGramModel m(vocab, 5, 100 + trial);
    // Larger weights than the initialization so the sigmoids are not flat.
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
    auto check = [&](std::vector<double>& w, const std::vector<double>& g) {
      for (size_t i = 0; i < w.size(); ++i) {
        const double keep = w[i];
        w[i] = keep + h;
        const double up = m.loss(ex);
        w[i] = keep - h;
        const double down = m.loss(ex);
        w[i] = keep;
        const double numeric = (up - down) / (2 * h);
        const double scale = std::max(std::abs(numeric), std::abs(g[i]));
        if (scale < 1e-7) {
          CHECK(std::abs(numeric - g[i]) < 1e-9);
          continue;
        }
        worst = std::max(worst, std::abs(numeric - g[i]) / scale);
      }
    };
    check(m.input(), gi);
    check(m.output(), go);
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("skip-gram training") {
  std::string text;
  for (int i = 0; i < 30; ++i) {
    text += "Kopf Schmerz stark\nRücken Schmerz stark\n";
    text += "Lippenstift Farbe rot\nLippenstift Farbe kräftig\n";
  }
  Corpus c = corpus_of(text);
  SkipGramConfig cfg;
  cfg.dims = 8;
  cfg.epochs = 30;
  cfg.seed = 11;

  TrainingResult r = train_skipgram_model(c, cfg);
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.epoch_loss.size() == 31);
  for (size_t i = 1; i < r.epoch_loss.size(); ++i) CHECK(r.epoch_loss[i] <= r.epoch_loss[i - 1]);
  CHECK(r.epoch_loss.back() < r.epoch_loss.front());

  VectorStore s = r.model.to_store();
  CHECK(cosine("Kopf", "Rücken", s) > cosine("Kopf", "Lippenstift", s));

  SUBCASE("deterministic for a seed") {
    TrainingResult again = train_skipgram_model(c, cfg);
    CHECK(again.model.input() == r.model.input());
    CHECK(again.epoch_loss == r.epoch_loss);
  }
  SUBCASE("zero epochs return the initialization") {
    cfg.epochs = 0;
    TrainingResult z = train_skipgram_model(c, cfg);
    SkipGramModel init(c.vocab, cfg.dims, cfg.seed);
    CHECK(z.model.input() == init.input());
    CHECK(z.model.output() == init.output());
    CHECK(z.epoch_loss.size() == 1);
  }
}

TEST_CASE("degenerate and empty corpora") {
  SkipGramConfig cfg;
  cfg.dims = 4;
  cfg.epochs = 2;
  TrainingResult r = train_skipgram_model(corpus_of("Text Text Text Text\n"), cfg);
  CHECK(r.degenerate);
  CHECK(r.model.vocab() == std::vector<std::string>{"Text"});
  CHECK_THROWS_AS(corpus_of("\n  \n"), EmptyCorpus);
}

TEST_CASE("the fixture corpus trains to vectors where co-selected fillers are closer") {
  SkipGramConfig cfg;
  cfg.dims = 16;
  cfg.epochs = 10;
  VectorStore s = train_skipgram(valgen::testing::data_dir() / "corpus.de.txt", cfg);
  CHECK(s.dimension() == 16);
  CHECK(s.contains("Bundesregierung"));
  CHECK(cosine("Bundesregierung", "Kommission", s) > cosine("Bundesregierung", "Lippenstift", s));
}
