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

#include "valgen/service.hpp"

#include <set>

#include <fmt/format.h>

namespace valgen {

int http_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return 400;
    case ErrorKind::kNotFound: return 404;
    case ErrorKind::kUnprocessable: return 422;
    case ErrorKind::kData: return 500;
  }
  return 500;
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::kUsage ? 2 : 3; }

json error_json(const Error& e) { return {{"error", e.code()}, {"message", e.what()}}; }

namespace {

const std::set<std::string> kRequestKeys = {"language", "noun", "pattern", "packages", "limit",
                                            "seed", "threshold", "include_adjectives", "include_trace"};

const json& need(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) throw BadRequest(fmt::format("missing field '{}'", key));
  return *it;
}

std::string need_string(const json& body, const char* key) {
  const json& v = need(body, key);
  if (!v.is_string()) throw BadRequest(fmt::format("field '{}' must be a string", key));
  return v.get<std::string>();
}

json package_json(const SemanticPackage& p) {
  json members = json::array();
  for (size_t i = 0; i < p.members.size(); ++i)
    members.push_back({{"lexeme", p.members[i]}, {"frequency", p.frequencies[i]}});
  return {{"slot", p.slot.str()},
          {"class", p.cls.str()},
          {"label", p.label},
          {"preview", p.preview},
          {"number", to_string(p.number)},
          {"grade", to_string(p.grade.grade)},
          {"representative_count", p.grade.representative_count},
          {"summed_count", p.grade.summed_count},
          {"members", members}};
}

json binding_json(const Binding& b) {
  json fillers = json::object();
  for (const auto& [slot, lex] : b.fillers)
    fillers[slot.str()] = {{"lexeme", lex}, {"number", to_string(b.numbers.at(slot))}};
  json adjectives = json::object();
  for (const auto& [idx, adj] : b.adjectives) adjectives[std::to_string(idx)] = adj;
  return {{"head", b.head}, {"fillers", fillers}, {"adjectives", adjectives}};
}

}  // namespace

GenerationRequest parse_generation_request(const json& body) {
  if (!body.is_object()) throw BadRequest("request body must be a JSON object");
  for (const auto& [key, value] : body.items())
    if (!kRequestKeys.count(key)) throw BadRequest(fmt::format("unknown field '{}'", key));
  GenerationRequest req;
  std::string lang = need_string(body, "language");
  auto parsed = parse_language(lang);
  if (!parsed) throw UnknownLanguage(fmt::format("unknown language: {}", lang));
  req.language = *parsed;
  req.lemma = need_string(body, "noun");
  req.pattern_id = need_string(body, "pattern");
  const json& pk = need(body, "packages");
  if (!pk.is_object()) throw BadRequest("field 'packages' must map slots to lists of packages");
  for (const auto& [slot, refs] : pk.items()) {
    if (!refs.is_array()) throw BadRequest(fmt::format("packages of slot '{}' must be a list", slot));
    std::vector<std::string> list;
    for (const auto& r : refs) {
      if (!r.is_string()) throw BadRequest(fmt::format("packages of slot '{}' must be strings", slot));
      list.push_back(r.get<std::string>());
    }
    req.packages.emplace_back(slot, std::move(list));
  }
  if (auto it = body.find("limit"); it != body.end()) {
    if (!it->is_number_integer()) throw BadRequest("field 'limit' must be an integer");
    long long v = it->get<long long>();
    if (v < 0) throw BadRequest("limit must be >= 0");
    if (v > 100000) throw BadRequest("limit must be <= 100000");
    req.limit = static_cast<int>(v);
  }
  if (auto it = body.find("seed"); it != body.end()) {
    if (!it->is_number_unsigned()) throw BadRequest("field 'seed' must be a non-negative integer");
    req.seed = it->get<std::uint64_t>();
  }
  if (auto it = body.find("threshold"); it != body.end()) {
    if (!it->is_number()) throw BadRequest("field 'threshold' must be a number");
    req.threshold = it->get<double>();
  }
  if (auto it = body.find("include_adjectives"); it != body.end()) {
    if (!it->is_boolean()) throw BadRequest("field 'include_adjectives' must be a boolean");
    req.include_adjectives = it->get<bool>();
  }
  if (auto it = body.find("include_trace"); it != body.end() && !it->is_boolean())
    throw BadRequest("field 'include_trace' must be a boolean");
  return req;
}

json generation_request_to_json(const GenerationRequest& req) {
  json packages = json::object();
  for (const auto& [slot, refs] : req.packages) packages[slot] = refs;
  return {{"language", to_string(req.language)}, {"noun", req.lemma},
          {"pattern", req.pattern_id},           {"packages", packages},
          {"limit", req.limit},                  {"seed", req.seed},
          {"threshold", req.threshold},          {"include_adjectives", req.include_adjectives}};
}

const Bundle& Service::bundle(const std::string& lang) const {
  if (lang.empty()) throw BadRequest("missing parameter 'lang'");
  return store_.bundle(lang);
}

json Service::languages() const {
  json out = json::array();
  for (Language l : store_.languages()) {
    const Bundle& b = store_.bundle(l);
    out.push_back({{"code", to_string(l)}, {"frames", b.lexicon.frames.size()}, {"vectors", b.vectors.has_value()}});
  }
  return out;
}

json Service::nouns(const std::string& lang) const {
  const Bundle& b = bundle(lang);
  json out = json::array();
  for (const auto& f : b.lexicon.frames)
    out.push_back({{"lemma", f.lemma},
                   {"gender", to_string(f.gender)},
                   {"scene", f.scene},
                   {"structures", list_structures(b, f.lemma).size()}});
  return out;
}

json Service::structures(const std::string& lang, const std::string& noun) const {
  const Bundle& b = bundle(lang);
  json out = json::array();
  for (const auto& s : list_structures(b, noun)) {
    json slots = json::array();
    for (const auto& r : s.slots) slots.push_back(r.str());
    out.push_back({{"id", s.id}, {"label", s.label}, {"arity", to_string(s.arity)},
                   {"grade", to_string(s.grade)}, {"slots", slots}});
  }
  return out;
}

json Service::packages(const std::string& lang, const std::string& noun, const std::string& pattern,
                       const std::string& slot) const {
  const Bundle& b = bundle(lang);
  json out = json::array();
  for (const auto& p : list_semantic_packages(b, noun, pattern, slot)) out.push_back(package_json(p));
  return out;
}

GenerationResult Service::run(const json& body) const {
  GenerationRequest req = parse_generation_request(body);
  return valgen::generate(store_.bundle(req.language), req);
}

json Service::generate(const json& body, bool include_trace) const {
  if (body.is_object())
    if (auto it = body.find("include_trace"); it != body.end() && it->is_boolean())
      include_trace = include_trace || it->get<bool>();
  GenerationResult r = run(body);
  json phrases = json::array();
  for (const auto& p : r.phrases) {
    json j = phrase_to_json(p);
    if (include_trace) j["trace"] = {{"binding", binding_json(p.binding)}, {"realization", to_json(p.realization)}};
    phrases.push_back(std::move(j));
  }
  return {{"phrases", phrases},
          {"stats", {{"generated", r.stats.generated}, {"filtered", r.stats.filtered}, {"truncated", r.stats.truncated}}}};
}

std::string Service::export_phrases(const json& body, ExportFormat format) const {
  return valgen::export_phrases(run(body).phrases, format);
}

json Service::grades(const std::string& lang, const std::string& noun) const {
  const Bundle& b = bundle(lang);
  const FrameAnalysis& fa = b.analysis(noun);
  json patterns = json::array();
  for (const auto& pa : fa.patterns) {
    json slots = json::array();
    for (const auto& ref : pa.slots) {
      auto it = pa.evidence.find(ref);
      if (it == pa.evidence.end()) {
        slots.push_back({{"slot", ref.str()}, {"table", nullptr}});
        continue;
      }
      const SlotEvidence& ev = fa.evidence[it->second];
      json classes = json::array();
      for (const auto& pk : ev.packages) {
        json c = to_json(pk.grade);
        c["label"] = pk.label;
        c["members"] = pk.members.size();
        classes.push_back(std::move(c));
      }
      slots.push_back({{"slot", ref.str()},
                       {"table", ev.table->name},
                       {"grade", to_json(ev.grade)},
                       {"candidates", ev.candidates.size()},
                       {"classes", classes}});
    }
    patterns.push_back({{"id", pa.pattern->id}, {"grade", to_string(pa.grade)}, {"slots", slots}});
  }
  return {{"lemma", fa.frame->lemma}, {"patterns", patterns}};
}

const CooccurrenceTable& best_table_for(const Bundle& b, const std::string& lemma, const std::string& lexeme) {
  const FrameAnalysis& fa = b.analysis(lemma);
  if (fa.evidence.empty()) throw LexemeAbsent(fmt::format("frame {} has no frequency evidence", lemma));
  const CooccurrenceTable* best = nullptr;
  int best_rank = 0;
  for (const auto& ev : fa.evidence) {
    const auto* e = ev.table->find_lexeme(lexeme);
    if (e && (!best || e->rank < best_rank)) {
      best = ev.table;
      best_rank = e->rank;
    }
  }
  return best ? *best : *fa.evidence.front().table;
}

json Service::contrast(const std::string& lang, const std::string& lexeme, const std::string& frame_a,
                       const std::string& frame_b) const {
  const Bundle& b = bundle(lang);
  const auto& ta = best_table_for(b, frame_a, lexeme);
  const auto& tb = best_table_for(b, frame_b, lexeme);
  json j = to_json(contrast_report(lexeme, ta, tb, store_.thresholds()));
  j["frame_a"] = frame_a;
  j["frame_b"] = frame_b;
  return j;
}

json Service::neighbors(const std::string& lang, const std::string& word, int k) const {
  const Bundle& b = bundle(lang);
  if (!b.vectors) throw MissingVector(fmt::format("no vectors loaded for {}", lang));
  if (k < 1) throw BadRequest("k must be >= 1");
  json out = json::array();
  for (const auto& [w, s] : nearest_neighbors(word, k, *b.vectors)) out.push_back({{"word", w}, {"similarity", s}});
  return out;
}

}  // namespace valgen
