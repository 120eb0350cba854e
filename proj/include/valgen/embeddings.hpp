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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace valgen {

class VectorStore {
 public:
  explicit VectorStore(int dimension = 2);

  // Throws DimensionMismatch, ZeroVector, DuplicateWord.
  void add(const std::string& word, std::vector<double> values);

  int dimension() const { return dimension_; }
  size_t size() const { return words_.size(); }
  bool contains(const std::string& word) const { return index_.count(word) > 0; }
  const std::vector<double>* find(const std::string& word) const;
  double norm(const std::string& word) const;
  // Insertion order.
  const std::vector<std::string>& words() const { return words_; }

 private:
  int dimension_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<std::string> words_;
  std::vector<std::vector<double>> vectors_;
  std::vector<double> norms_;
};

VectorStore parse_vectors(std::istream& in, const std::string& name = "vectors");
VectorStore load_vectors(const std::filesystem::path& path);
void write_vectors(const VectorStore& store, std::ostream& out);
void save_vectors(const VectorStore& store, const std::filesystem::path& path);

double cosine(const std::string& a, const std::string& b, const VectorStore& store);
std::vector<std::pair<std::string, double>> nearest_neighbors(const std::string& w, int k, const VectorStore& store);

enum class Decision { accept, reject, unscored_accept };
std::string_view to_string(Decision d);

struct CompatibilityVerdict {
  std::string a;
  std::string b;
  std::optional<double> similarity;
  Decision decision = Decision::unscored_accept;
};

inline constexpr double kDefaultThreshold = 0.25;

std::vector<CompatibilityVerdict> compatibility_filter(const std::vector<std::pair<std::string, std::string>>& pairs,
                                                       double threshold, const VectorStore& store);

// Skip-gram with negative sampling. Negatives are drawn once per
// (center, context) pair from the unigram^0.75 distribution and then held
// fixed, so every epoch minimises the same objective by full-batch gradient
// descent with step halving; the per-epoch loss never increases.
struct SkipGramConfig {
  int dims = 50;
  int window = 2;
  int negatives = 5;
  int epochs = 5;
  std::uint64_t seed = 1;
  double learning_rate = 0.5;
};

struct TrainingExample {
  int center = 0;
  int context = 0;
  std::vector<int> negatives;
};

class SkipGramModel {
 public:
  SkipGramModel(std::vector<std::string> vocab, int dims, std::uint64_t seed);

  int dims() const { return dims_; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  std::vector<double>& input() { return in_; }
  std::vector<double>& output() { return out_; }
  const std::vector<double>& input() const { return in_; }
  const std::vector<double>& output() const { return out_; }

  // Mean negative-sampling loss over the examples.
  double loss(const std::vector<TrainingExample>& examples) const;
  // Mean loss and its gradient with respect to input and output matrices.
  double gradient(const std::vector<TrainingExample>& examples, std::vector<double>& grad_in,
                  std::vector<double>& grad_out) const;

  VectorStore to_store() const;

 private:
  std::vector<std::string> vocab_;
  int dims_;
  std::vector<double> in_;   // vocab x dims, row major
  std::vector<double> out_;  // vocab x dims
};

struct Corpus {
  std::vector<std::string> vocab;       // sorted
  std::vector<long long> counts;        // per vocab entry
  std::vector<std::vector<int>> sentences;
};

Corpus read_corpus(std::istream& in);
Corpus read_corpus(const std::filesystem::path& path);

std::vector<TrainingExample> make_examples(const Corpus& corpus, int window, int negatives, std::uint64_t seed);

struct TrainingResult {
  SkipGramModel model;
  std::vector<double> epoch_loss;  // loss before training, then after each epoch
  bool degenerate = false;         // single-type vocabulary
};

TrainingResult train_skipgram_model(const Corpus& corpus, const SkipGramConfig& config);
VectorStore train_skipgram(const std::filesystem::path& corpus, const SkipGramConfig& config);

}  // namespace valgen
