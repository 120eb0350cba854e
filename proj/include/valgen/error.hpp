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

#include <stdexcept>
#include <string>

namespace valgen {

// How an error surfaces to callers: HTTP status class and CLI exit code.
enum class ErrorKind {
  kUsage,       // malformed request or flags (400, exit 2)
  kNotFound,    // unknown frame, pattern, slot, language (404, exit 3)
  kUnprocessable,  // arity or package mismatch (422, exit 3)
  kData,        // broken data files (500 at runtime, exit 3)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

#define VALGEN_ERROR(Name, Kind, Code)                                 \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message)                          \
        : Error(ErrorKind::Kind, Code, message) {}                     \
  };

// Loading
VALGEN_ERROR(SchemaError, kData, "schema_error")
VALGEN_ERROR(DanglingReference, kData, "dangling_reference")
VALGEN_ERROR(DuplicateId, kData, "duplicate_id")
VALGEN_ERROR(OrphanNode, kData, "orphan_node")
VALGEN_ERROR(DuplicatePath, kData, "duplicate_path")
VALGEN_ERROR(FormatError, kData, "format_error")
VALGEN_ERROR(InconsistentPerMillion, kData, "inconsistent_per_million")
VALGEN_ERROR(DimensionMismatch, kData, "dimension_mismatch")
VALGEN_ERROR(ZeroVector, kData, "zero_vector")
VALGEN_ERROR(DuplicateWord, kData, "duplicate_word")
VALGEN_ERROR(EmptyCorpus, kData, "empty_corpus")
VALGEN_ERROR(UnannotatedFiller, kData, "unannotated_filler")

// Lookup
VALGEN_ERROR(UnknownPath, kNotFound, "unknown_path")
VALGEN_ERROR(UnknownLanguage, kNotFound, "unknown_language")
VALGEN_ERROR(UnknownFrame, kNotFound, "unknown_frame")
VALGEN_ERROR(UnknownPattern, kNotFound, "unknown_pattern")
VALGEN_ERROR(UnknownSlot, kNotFound, "unknown_slot")
VALGEN_ERROR(MissingVector, kNotFound, "missing_vector")
VALGEN_ERROR(LexemeAbsent, kNotFound, "lexeme_absent")

// Realization
VALGEN_ERROR(MissingForm, kData, "missing_form")
VALGEN_ERROR(InvalidFeatureCombination, kUnprocessable, "invalid_feature_combination")
VALGEN_ERROR(MissingLinkElement, kUnprocessable, "missing_link_element")
VALGEN_ERROR(AgreementUnsatisfiable, kUnprocessable, "agreement_unsatisfiable")
VALGEN_ERROR(MissingBinding, kUnprocessable, "missing_binding")

// Requests
VALGEN_ERROR(UnknownPackage, kUnprocessable, "unknown_package")
VALGEN_ERROR(EmptyPackageSelection, kUnprocessable, "empty_package_selection")
VALGEN_ERROR(ArityMismatch, kUnprocessable, "arity_mismatch")
VALGEN_ERROR(PreconditionViolation, kUsage, "precondition_violation")
VALGEN_ERROR(BadRequest, kUsage, "bad_request")

#undef VALGEN_ERROR

}  // namespace valgen
