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

#include "valgen/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "valgen/error.hpp"

namespace valgen {

VectorStore::VectorStore(int dimension) : dimension_(dimension) {
  if (dimension < 2) throw FormatError(fmt::format("vector dimension must be >= 2, got {}", dimension));
}

void VectorStore::add(const std::string& word, std::vector<double> values) {
  if (static_cast<int>(values.size()) != dimension_)
    throw DimensionMismatch(
        fmt::format("vector for '{}' has {} values, expected {}", word, values.size(), dimension_));
  if (index_.count(word)) throw DuplicateWord(fmt::format("duplicate vector for '{}'", word));
  double sq = 0.0;
  for (double v : values) sq += v * v;
  double n = std::sqrt(sq);
  if (!(n > 0.0) || !std::isfinite(n)) throw ZeroVector(fmt::format("vector for '{}' has zero norm", word));
  index_.emplace(word, words_.size());
  words_.push_back(word);
  vectors_.push_back(std::move(values));
  norms_.push_back(n);
}

const std::vector<double>* VectorStore::find(const std::string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

double VectorStore::norm(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) throw MissingVector(fmt::format("no vector for '{}'", word));
  return norms_[it->second];
}

VectorStore parse_vectors(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(fmt::format("{}: missing header line", name));
  std::istringstream hs(line);
  long long count = -1;
  int dim = 0;
  std::string extra;
  if (!(hs >> count >> dim) || (hs >> extra) || count < 0)
    throw FormatError(fmt::format("{}: header must be '<vocab_count> <dimension>'", name));
  VectorStore store(dim);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::vector<double> values;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      double v = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size() || !std::isfinite(v))
        throw FormatError(fmt::format("{}:{}: bad number '{}'", name, lineno, tok));
      values.push_back(v);
    }
    store.add(word, std::move(values));
  }
  if (static_cast<long long>(store.size()) != count)
    throw FormatError(fmt::format("{}: header announces {} vectors, found {}", name, count, store.size()));
  return store;
}

VectorStore load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(fmt::format("cannot open {}", path.string()));
  return parse_vectors(in, path.filename().string());
}

void write_vectors(const VectorStore& store, std::ostream& out) {
  out << store.size() << ' ' << store.dimension() << '\n';
  for (const auto& w : store.words()) {
    out << w;
    for (double v : *store.find(w)) out << ' ' << fmt::format("{:.6f}", v);
    out << '\n';
  }
}

void save_vectors(const VectorStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(fmt::format("cannot write {}", path.string()));
  write_vectors(store, out);
}

double cosine(const std::string& a, const std::string& b, const VectorStore& store) {
  const auto* va = store.find(a);
  if (!va) throw MissingVector(fmt::format("no vector for '{}'", a));
  const auto* vb = store.find(b);
  if (!vb) throw MissingVector(fmt::format("no vector for '{}'", b));
  double dot = 0.0;
  for (size_t i = 0; i < va->size(); ++i) dot += (*va)[i] * (*vb)[i];
  double c = dot / (store.norm(a) * store.norm(b));
  return std::clamp(c, -1.0, 1.0);
}

std::vector<std::pair<std::string, double>> nearest_neighbors(const std::string& w, int k, const VectorStore& store) {
  if (!store.contains(w)) throw MissingVector(fmt::format("no vector for '{}'", w));
  if (k < 1) throw PreconditionViolation("k must be >= 1");
  std::vector<std::pair<std::string, double>> all;
  for (const auto& other : store.words())
    if (other != w) all.emplace_back(other, cosine(w, other, store));
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (static_cast<size_t>(k) < all.size()) all.resize(static_cast<size_t>(k));
  return all;
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::accept:
      return "accept";
    case Decision::reject:
      return "reject";
    case Decision::unscored_accept:
      return "unscored_accept";
  }
  return "?";
}

std::vector<CompatibilityVerdict> compatibility_filter(const std::vector<std::pair<std::string, std::string>>& pairs,
                                                       double threshold, const VectorStore& store) {
  if (!(threshold >= -1.0 && threshold <= 1.0))
    throw PreconditionViolation(fmt::format("threshold {} outside [-1, 1]", threshold));
  std::vector<CompatibilityVerdict> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    CompatibilityVerdict v{a, b, std::nullopt, Decision::unscored_accept};
    if (store.contains(a) && store.contains(b)) {
      v.similarity = cosine(a, b, store);
      v.decision = *v.similarity < threshold ? Decision::reject : Decision::accept;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Skip-gram

namespace {

double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }
double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SkipGramModel::SkipGramModel(std::vector<std::string> vocab, int dims, std::uint64_t seed)
    : vocab_(std::move(vocab)), dims_(dims) {
  if (dims < 2) throw PreconditionViolation(fmt::format("dims must be >= 2, got {}", dims));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  in_.resize(vocab_.size() * static_cast<size_t>(dims));
  out_.resize(in_.size());
  for (auto& x : in_) x = u(rng) / dims;
  for (auto& x : out_) x = u(rng) / dims;
}

double SkipGramModel::loss(const std::vector<TrainingExample>& examples) const {
  if (examples.empty()) return 0.0;
  double total = 0.0;
  for (const auto& ex : examples) {
    const double* v = &in_[static_cast<size_t>(ex.center) * dims_];
    total -= log_sigmoid(dot(v, &out_[static_cast<size_t>(ex.context) * dims_], dims_));
    for (int n : ex.negatives) total -= log_sigmoid(-dot(v, &out_[static_cast<size_t>(n) * dims_], dims_));
  }
  return total / static_cast<double>(examples.size());
}

double SkipGramModel::gradient(const std::vector<TrainingExample>& examples, std::vector<double>& grad_in,
                               std::vector<double>& grad_out) const {
  grad_in.assign(in_.size(), 0.0);
  grad_out.assign(out_.size(), 0.0);
  if (examples.empty()) return 0.0;
  const double scale = 1.0 / static_cast<double>(examples.size());
  double total = 0.0;
  for (const auto& ex : examples) {
    const size_t c = static_cast<size_t>(ex.center) * dims_;
    const double* v = &in_[c];
    auto term = [&](int word, double label) {
      const size_t o = static_cast<size_t>(word) * dims_;
      const double* u = &out_[o];
      double s = dot(v, u, dims_);
      // label 1: -log sig(s); label 0: -log sig(-s)
      total -= label > 0 ? log_sigmoid(s) : log_sigmoid(-s);
      double g = (sigmoid(s) - label) * scale;
      for (int i = 0; i < dims_; ++i) {
        grad_in[c + i] += g * u[i];
        grad_out[o + i] += g * v[i];
      }
    };
    term(ex.context, 1.0);
    for (int n : ex.negatives) term(n, 0.0);
  }
  return total * scale;
}

VectorStore SkipGramModel::to_store() const {
  VectorStore store(dims_);
  for (size_t w = 0; w < vocab_.size(); ++w)
    store.add(vocab_[w], std::vector<double>(in_.begin() + w * dims_, in_.begin() + (w + 1) * dims_));
  return store;
}

Corpus read_corpus(std::istream& in) {
  std::vector<std::vector<std::string>> raw;
  std::map<std::string, long long> counts;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) {
      ++counts[t];
      toks.push_back(t);
    }
    if (!toks.empty()) raw.push_back(std::move(toks));
  }
  if (counts.empty()) throw EmptyCorpus("corpus contains no tokens");
  Corpus c;
  std::map<std::string, int> id;
  for (const auto& [w, n] : counts) {
    id[w] = static_cast<int>(c.vocab.size());
    c.vocab.push_back(w);
    c.counts.push_back(n);
  }
  for (const auto& toks : raw) {
    std::vector<int> s;
    for (const auto& t : toks) s.push_back(id[t]);
    c.sentences.push_back(std::move(s));
  }
  return c;
}

Corpus read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EmptyCorpus(fmt::format("cannot open corpus {}", path.string()));
  return read_corpus(in);
}

std::vector<TrainingExample> make_examples(const Corpus& corpus, int window, int negatives, std::uint64_t seed) {
  std::vector<double> weights;
  for (long long n : corpus.counts) weights.push_back(std::pow(static_cast<double>(n), 0.75));
  std::discrete_distribution<int> noise(weights.begin(), weights.end());
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
  const bool single_type = corpus.vocab.size() == 1;
  std::vector<TrainingExample> out;
  for (const auto& s : corpus.sentences) {
    for (size_t i = 0; i < s.size(); ++i) {
      size_t lo = i >= static_cast<size_t>(window) ? i - window : 0;
      size_t hi = std::min(s.size() - 1, i + static_cast<size_t>(window));
      for (size_t j = lo; j <= hi; ++j) {
        if (j == i) continue;
        TrainingExample ex{s[i], s[j], {}};
        for (int k = 0; k < negatives; ++k) {
          int n = noise(rng);
          for (int tries = 0; !single_type && n == ex.context && tries < 16; ++tries) n = noise(rng);
          ex.negatives.push_back(n);
        }
        out.push_back(std::move(ex));
      }
    }
  }
  return out;
}

TrainingResult train_skipgram_model(const Corpus& corpus, const SkipGramConfig& config) {
  if (corpus.vocab.empty()) throw EmptyCorpus("corpus contains no tokens");
  if (config.dims < 2) throw PreconditionViolation("dims must be >= 2");
  if (config.window < 1 || config.negatives < 0 || config.epochs < 0)
    throw PreconditionViolation("window must be >= 1, negatives and epochs >= 0");
  TrainingResult r{SkipGramModel(corpus.vocab, config.dims, config.seed), {}, corpus.vocab.size() == 1};
  if (r.degenerate)
    spdlog::warn("corpus has a single word type; negative samples carry no diversity");
  auto examples = make_examples(corpus, config.window, config.negatives, config.seed);
  auto& model = r.model;
  double current = model.loss(examples);
  r.epoch_loss.push_back(current);
  double lr = config.learning_rate;
  std::vector<double> gi, go;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    model.gradient(examples, gi, go);
    auto saved_in = model.input();
    auto saved_out = model.output();
    bool improved = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      for (size_t i = 0; i < gi.size(); ++i) {
        model.input()[i] = saved_in[i] - lr * gi[i];
        model.output()[i] = saved_out[i] - lr * go[i];
      }
      double next = model.loss(examples);
      if (next <= current) {
        current = next;
        improved = true;
        break;
      }
      lr *= 0.5;
    }
    if (!improved) {
      model.input() = saved_in;
      model.output() = saved_out;
    } else {
      lr = std::min(config.learning_rate, lr * 1.25);
    }
    r.epoch_loss.push_back(current);
    spdlog::debug("epoch {} loss {:.6f}", epoch + 1, current);
  }
  return r;
}

VectorStore train_skipgram(const std::filesystem::path& corpus, const SkipGramConfig& config) {
  return train_skipgram_model(read_corpus(corpus), config).model.to_store();
}

}  // namespace valgen
