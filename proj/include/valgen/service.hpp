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

#include <optional>
#include <string>

#include "valgen/bundle.hpp"
#include "valgen/error.hpp"
#include "valgen/generation.hpp"

namespace valgen {

int http_status(ErrorKind kind);
int exit_code(ErrorKind kind);
json error_json(const Error& e);

// Strict: unknown keys, wrong types and missing fields raise BadRequest.
GenerationRequest parse_generation_request(const json& body);
json generation_request_to_json(const GenerationRequest& req);

// Shared query layer behind the CLI and the HTTP API. Every method is a pure
// read of the immutable data snapshot.
class Service {
 public:
  explicit Service(const DataStore& store) : store_(store) {}

  json languages() const;
  json nouns(const std::string& lang) const;
  json structures(const std::string& lang, const std::string& noun) const;
  json packages(const std::string& lang, const std::string& noun, const std::string& pattern,
                const std::string& slot) const;
  json generate(const json& body, bool include_trace = false) const;
  std::string export_phrases(const json& body, ExportFormat format) const;
  json grades(const std::string& lang, const std::string& noun) const;
  json contrast(const std::string& lang, const std::string& lexeme, const std::string& frame_a,
                const std::string& frame_b) const;
  json neighbors(const std::string& lang, const std::string& word, int k) const;

  const DataStore& store() const { return store_; }

 private:
  const Bundle& bundle(const std::string& lang) const;
  GenerationResult run(const json& body) const;

  const DataStore& store_;
};

// Table of a frame in which `lexeme` ranks best; the first evidence table when absent.
const CooccurrenceTable& best_table_for(const Bundle& b, const std::string& lemma, const std::string& lexeme);

}  // namespace valgen
