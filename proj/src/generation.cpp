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

#include "valgen/generation.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "valgen/error.hpp"

namespace valgen {

namespace {

const PatternAnalysis& offered_pattern(const FrameAnalysis& fa, const std::string& id) {
  const PatternAnalysis* pa = fa.find_pattern(id);
  if (!pa) throw UnknownPattern(fmt::format("unknown pattern: {}", id));
  if (pa->grade == PatternGrade::Excluded)
    throw UnknownPattern(fmt::format("pattern {} is not offered (graded Excluded)", id));
  return *pa;
}

bool offered(const PackageInfo& p) { return p.grade.grade != ClassGrade::Excluded && !p.members.empty(); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const PackageInfo* package_by_class(const std::vector<const PackageInfo*>& pkgs, const std::string& cls) {
  for (const auto* p : pkgs)
    if (p->cls.str() == cls) return p;
  return nullptr;
}

// Which argument slot owns the noun group of pattern slot `idx`; nullopt for the head group.
std::optional<SlotRef> group_owner(const RealizationPattern& p, const GroupLayout& layout, int idx) {
  int g = layout.group_of[idx];
  if (g < 0) return std::nullopt;
  const PatternSlot& noun = p.slots[layout.groups[g].noun_slot];
  if (noun.kind == SlotKind::head) return std::nullopt;
  return noun.binds;
}

Binding make_binding(const FrameAnalysis& fa, const std::vector<SlotRef>& slots,
                     const std::vector<const SlotCandidate*>& fills) {
  Binding bnd;
  bnd.head = fa.frame->inflection_ref;
  for (size_t i = 0; i < slots.size(); ++i) {
    bnd.fillers[slots[i]] = fills[i]->lexeme;
    bnd.numbers[slots[i]] = fills[i]->number;
  }
  return bnd;
}

GeneratedPhrase build_phrase(const Bundle& b, const ResolvedRequest& r, const GenerationRequest& req,
                             const std::vector<const SlotCandidate*>& fills) {
  GeneratedPhrase ph;
  ph.pattern_id = r.pattern->pattern->id;
  ph.binding = make_binding(*r.frame, r.slots, fills);
  if (req.include_adjectives) {
    std::vector<SlotCandidate> plain;
    for (const auto* f : fills) plain.push_back(*f);
    ph.binding.adjectives = choose_adjectives(b, r, plain, req.seed);
  }
  ph.adjectives = ph.binding.adjectives;
  for (size_t i = 0; i < r.slots.size(); ++i)
    ph.fills.push_back({r.slots[i], fills[i]->lexeme, fills[i]->number, fills[i]->package, fills[i]->frequency});
  ph.realization = realize_np(*r.pattern->pattern, ph.binding, b.lexicon);
  Recheck check = agreement_recheck(*r.pattern->pattern, ph.realization, b.lexicon);
  if (!check.ok)
    throw AgreementUnsatisfiable(fmt::format("'{}' fails the agreement re-check: {}", ph.realization.text,
                                             check.problems.front()));
  ph.text = ph.realization.text;
  return ph;
}

}  // namespace

std::vector<StructureInfo> list_structures(const Bundle& b, const std::string& lemma) {
  const FrameAnalysis& fa = b.analysis(lemma);
  std::vector<StructureInfo> out;
  for (const auto& pa : fa.patterns) {
    if (pa.grade == PatternGrade::Excluded) continue;
    out.push_back({pa.pattern->id, pa.pattern->label, pa.pattern->arity, pa.grade, pa.slots});
  }
  std::sort(out.begin(), out.end(), [](const StructureInfo& x, const StructureInfo& y) {
    if (x.grade != y.grade) return grade_rank(x.grade) < grade_rank(y.grade);
    return x.id < y.id;
  });
  return out;
}

SlotRef resolve_slot(const PatternAnalysis& pa, const std::string& key) {
  if (key == "a" && !pa.slots.empty()) return pa.slots[0];
  if (key == "b" && pa.slots.size() > 1) return pa.slots[1];
  auto ref = SlotRef::parse(key);
  if (ref && std::find(pa.slots.begin(), pa.slots.end(), *ref) != pa.slots.end()) return *ref;
  throw UnknownSlot(fmt::format("pattern {} has no argument slot '{}'", pa.pattern->id, key));
}

std::vector<SemanticPackage> list_semantic_packages(const Bundle& b, const std::string& lemma,
                                                    const std::string& pattern_id, const std::string& slot_key) {
  const FrameAnalysis& fa = b.analysis(lemma);
  const PatternAnalysis& pa = offered_pattern(fa, pattern_id);
  std::string key = slot_key;
  if (key.empty()) {
    if (pa.slots.size() != 1)
      throw BadRequest(fmt::format("pattern {} has {} argument slots; name one", pattern_id, pa.slots.size()));
    key = "a";
  }
  const SlotRef slot = resolve_slot(pa, key);
  const SlotEvidence& ev = fa.evidence[pa.evidence.at(slot)];
  const RealizationPattern& pattern = *pa.pattern;
  const GroupLayout layout = layout_groups(pattern);
  const FrameProfile& profile = *fa.profile;

  // Default filler for the other slot: top member of its first offered package.
  std::map<SlotRef, std::pair<std::string, Number>> others;
  for (const auto& ref : pa.slots) {
    if (ref == slot) continue;
    for (const auto& pk : fa.evidence[pa.evidence.at(ref)].packages)
      if (offered(pk)) {
        others[ref] = {pk.members.front(), numbers_of(pk.number).front()};
        break;
      }
  }

  std::vector<SemanticPackage> out;
  for (const auto& pk : ev.packages) {
    if (!offered(pk)) continue;
    SemanticPackage sp;
    sp.slot = slot;
    sp.cls = pk.cls;
    sp.label = pk.label;
    sp.number = pk.number;
    sp.grade = pk.grade;
    sp.members = pk.members;
    for (const auto& m : pk.members) sp.frequencies.push_back(ev.frequency_of(m));

    Binding bnd;
    bnd.head = fa.frame->inflection_ref;
    bnd.fillers[slot] = pk.members.front();
    bnd.numbers[slot] = numbers_of(pk.number).front();
    bool complete = true;
    for (const auto& ref : pa.slots) {
      if (ref == slot) continue;
      auto it = others.find(ref);
      if (it == others.end()) {
        complete = false;
        break;
      }
      bnd.fillers[ref] = it->second.first;
      bnd.numbers[ref] = it->second.second;
    }
    for (size_t i = 0; i < pattern.slots.size(); ++i) {
      const PatternSlot& s = pattern.slots[i];
      if (s.kind != SlotKind::adjective) continue;
      auto owner = group_owner(pattern, layout, static_cast<int>(i));
      const std::vector<std::string>* pool = nullptr;
      if (!owner) pool = !pk.head_adjectives.empty() ? &pk.head_adjectives : &profile.head_adjectives;
      else if (*owner == slot && !pk.filler_adjectives.empty()) pool = &pk.filler_adjectives;
      else pool = &profile.filler_adjectives;
      if (!pool->empty()) bnd.adjectives[static_cast<int>(i)] = pool->front();
    }
    if (complete) {
      Realization r = realize_np(pattern, bnd, b.lexicon);
      for (auto& t : r.tokens)
        if (t.kind == SlotKind::adjective && !t.surface.empty()) t.surface = "(" + t.surface + ")";
      sp.preview = join_surface(r.tokens);
    }
    out.push_back(std::move(sp));
  }
  return out;
}

ResolvedRequest resolve_request(const Bundle& b, const GenerationRequest& req) {
  if (req.limit < 0) throw BadRequest("limit must be >= 0");
  if (!(req.threshold >= -1.0 && req.threshold <= 1.0))
    throw PreconditionViolation(fmt::format("threshold {} outside [-1, 1]", req.threshold));
  ResolvedRequest r;
  r.frame = &b.analysis(req.lemma);
  r.pattern = &offered_pattern(*r.frame, req.pattern_id);
  r.slots = r.pattern->slots;
  r.packages.resize(r.slots.size());
  r.candidates.resize(r.slots.size());

  std::set<SlotRef> named;
  for (const auto& [key, refs] : req.packages) {
    SlotRef slot = resolve_slot(*r.pattern, key);
    if (!named.insert(slot).second) throw BadRequest(fmt::format("slot {} selected twice", slot.str()));
  }
  if (named.size() != r.slots.size())
    throw ArityMismatch(fmt::format("pattern {} is {} and needs {} package selection(s), got {}", req.pattern_id,
                                    to_string(r.pattern->pattern->arity), r.slots.size(), named.size()));

  const FrameProfile& profile = *r.frame->profile;
  for (const auto& [key, refs] : req.packages) {
    SlotRef slot = resolve_slot(*r.pattern, key);
    size_t si = static_cast<size_t>(std::find(r.slots.begin(), r.slots.end(), slot) - r.slots.begin());
    if (refs.empty()) throw EmptyPackageSelection(fmt::format("no package selected for slot {}", slot.str()));
    const SlotEvidence& ev = r.frame->evidence[r.pattern->evidence.at(slot)];
    for (const auto& ref : refs) {
      std::optional<ClassPath> cls;
      if (auto a = profile.aliases.find(ref); a != profile.aliases.end()) cls = a->second;
      ClassPath parsed = ClassPath::parse(ref);
      const PackageInfo* hit = nullptr;
      for (const auto& pk : ev.packages) {
        if (!offered(pk)) continue;
        if ((cls && pk.cls == *cls) || pk.cls == parsed || pk.label == ref) {
          hit = &pk;
          break;
        }
      }
      if (!hit)
        throw UnknownPackage(fmt::format("no offered package '{}' for slot {} of {}", ref, slot.str(), req.pattern_id));
      if (std::find(r.packages[si].begin(), r.packages[si].end(), hit) == r.packages[si].end())
        r.packages[si].push_back(hit);
    }
    std::map<std::string, std::pair<std::set<Number>, std::string>> pool;
    for (const auto* pk : r.packages[si])
      for (const auto& m : pk->members) {
        auto& entry = pool[m];
        if (entry.second.empty()) entry.second = pk->cls.str();
        for (Number n : numbers_of(pk->number)) entry.first.insert(n);
      }
    auto& out = r.candidates[si];
    for (const auto& [lexeme, v] : pool)
      for (Number n : v.first) out.push_back({lexeme, n, v.second, ev.frequency_of(lexeme)});
    std::stable_sort(out.begin(), out.end(), [](const SlotCandidate& x, const SlotCandidate& y) {
      if (x.frequency != y.frequency) return x.frequency > y.frequency;
      if (x.lexeme != y.lexeme) return x.lexeme < y.lexeme;
      return x.number < y.number;
    });
  }
  return r;
}

std::map<int, std::string> choose_adjectives(const Bundle& b, const ResolvedRequest& r,
                                             const std::vector<SlotCandidate>& fills, std::uint64_t seed) {
  (void)b;
  std::map<int, std::string> out;
  const RealizationPattern& pattern = *r.pattern->pattern;
  const GroupLayout layout = layout_groups(pattern);
  const FrameProfile& profile = *r.frame->profile;
  std::string key;
  for (const auto& f : fills) key += f.lexeme + "/" + std::string(to_string(f.number)) + ";";
  for (size_t i = 0; i < pattern.slots.size(); ++i) {
    const PatternSlot& s = pattern.slots[i];
    if (s.kind != SlotKind::adjective) continue;
    auto owner = group_owner(pattern, layout, static_cast<int>(i));
    const std::vector<std::string>* pool = nullptr;
    if (!owner) {
      for (size_t k = 0; k < fills.size() && !pool; ++k) {
        const PackageInfo* pk = package_by_class(r.packages[k], fills[k].package);
        if (pk && !pk->head_adjectives.empty()) pool = &pk->head_adjectives;
      }
      if (!pool) pool = &profile.head_adjectives;
    } else {
      for (size_t k = 0; k < fills.size() && !pool; ++k) {
        if (r.slots[k] != *owner) continue;
        const PackageInfo* pk = package_by_class(r.packages[k], fills[k].package);
        if (pk && !pk->filler_adjectives.empty()) pool = &pk->filler_adjectives;
      }
      if (!pool) pool = &profile.filler_adjectives;
    }
    if (pool->empty()) continue;
    std::uint64_t h = splitmix64(seed ^ fnv1a(key + "#" + std::to_string(i)));
    out[static_cast<int>(i)] = (*pool)[h % pool->size()];
  }
  return out;
}

GenerationResult generate_mono(const Bundle& b, const GenerationRequest& req) {
  ResolvedRequest r = resolve_request(b, req);
  if (r.slots.size() != 1)
    throw ArityMismatch(fmt::format("pattern {} is not monoargumental", req.pattern_id));
  GenerationResult out;
  const auto& cands = r.candidates[0];
  out.stats.generated = static_cast<int>(cands.size());
  size_t keep = std::min(cands.size(), static_cast<size_t>(req.limit));
  out.stats.truncated = static_cast<int>(cands.size() - keep);
  for (size_t i = 0; i < cands.size(); ++i) {
    GeneratedPhrase ph = build_phrase(b, r, req, {&cands[i]});
    if (i < keep) out.phrases.push_back(std::move(ph));
  }
  return out;
}

GenerationResult generate_bi(const Bundle& b, const GenerationRequest& req) {
  ResolvedRequest r = resolve_request(b, req);
  if (r.slots.size() != 2) throw ArityMismatch(fmt::format("pattern {} is not biargumental", req.pattern_id));
  const auto& as = r.candidates[0];
  const auto& bs = r.candidates[1];
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& x : as)
    for (const auto& y : bs) pairs.emplace_back(x.lexeme, y.lexeme);
  std::vector<CompatibilityVerdict> verdicts;
  if (b.vectors) {
    verdicts = compatibility_filter(pairs, req.threshold, *b.vectors);
  } else {
    for (const auto& [x, y] : pairs) verdicts.push_back({x, y, std::nullopt, Decision::unscored_accept});
  }
  GenerationResult out;
  out.stats.generated = static_cast<int>(pairs.size());
  std::vector<std::pair<long long, GeneratedPhrase>> accepted;
  size_t k = 0;
  for (const auto& x : as)
    for (const auto& y : bs) {
      const CompatibilityVerdict& v = verdicts[k++];
      if (v.decision == Decision::reject) {
        ++out.stats.filtered;
        continue;
      }
      GeneratedPhrase ph = build_phrase(b, r, req, {&x, &y});
      ph.similarity = v.similarity;
      ph.decision = v.decision;
      accepted.emplace_back(std::min(x.frequency, y.frequency), std::move(ph));
    }
  std::stable_sort(accepted.begin(), accepted.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first > q.first;
    return p.second.text < q.second.text;
  });
  size_t keep = std::min(accepted.size(), static_cast<size_t>(req.limit));
  out.stats.truncated = static_cast<int>(accepted.size() - keep);
  for (size_t i = 0; i < keep; ++i) out.phrases.push_back(std::move(accepted[i].second));
  return out;
}

GenerationResult generate(const Bundle& b, const GenerationRequest& req) {
  const PatternAnalysis& pa = offered_pattern(b.analysis(req.lemma), req.pattern_id);
  return pa.slots.size() == 2 ? generate_bi(b, req) : generate_mono(b, req);
}

std::optional<ExportFormat> parse_export_format(std::string_view s) {
  if (s == "json") return ExportFormat::json;
  if (s == "csv") return ExportFormat::csv;
  return std::nullopt;
}

json phrase_to_json(const GeneratedPhrase& p) {
  json slots = json::object();
  json freqs = json::object();
  for (const auto& f : p.fills) {
    slots[f.slot.str()] = {{"lexeme", f.lexeme}, {"number", to_string(f.number)}, {"package", f.package}};
    freqs[f.slot.str()] = f.frequency;
  }
  for (const auto& [idx, adj] : p.adjectives) slots[fmt::format("adj.{}", idx)] = {{"lexeme", adj}};
  json scores = {{"frequencies", freqs}};
  scores["similarity"] = p.similarity ? json(*p.similarity) : json(nullptr);
  scores["decision"] = p.decision ? json(to_string(*p.decision)) : json(nullptr);
  return {{"text", p.text}, {"pattern_id", p.pattern_id}, {"slots", slots}, {"scores", scores}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_phrases(const std::vector<GeneratedPhrase>& phrases, ExportFormat format) {
  if (format == ExportFormat::json) {
    json arr = json::array();
    for (const auto& p : phrases) arr.push_back(phrase_to_json(p));
    return arr.dump(2);
  }
  std::string out(kCsvHeader);
  out += "\r\n";
  for (const auto& p : phrases) {
    std::vector<std::string> fills;
    for (const auto& f : p.fills) fills.push_back(fmt::format("{}={}/{}", f.slot.str(), f.lexeme, to_string(f.number)));
    std::string sim = p.similarity ? fmt::format("{:.6f}", *p.similarity) : "";
    out += fmt::format("{},{},{},{}\r\n", csv_field(p.text), csv_field(p.pattern_id),
                       csv_field(fmt::format("{}", fmt::join(fills, ";"))), csv_field(sim));
  }
  return out;
}

}  // namespace valgen
