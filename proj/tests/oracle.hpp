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

// Brute-force reference enumeration for the generation engines.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "valgen/bundle.hpp"
#include "valgen/generation.hpp"
#include "valgen/morphology.hpp"

namespace valgen::testing {

struct OraclePhrase {
  std::string text;
  std::string fills;  // "Arg5.2=Bemerkung/sg;Arg1.1=Akademikerin/sg"
  std::string packages;
  bool operator==(const OraclePhrase&) const = default;
};

inline std::string describe(const GeneratedPhrase& p) {
  std::string s;
  for (const auto& f : p.fills) s += fmt::format("{}{}={}/{}", s.empty() ? "" : ";", f.slot.str(), f.lexeme, to_string(f.number));
  return s;
}

inline std::vector<OraclePhrase> project(const std::vector<GeneratedPhrase>& ps) {
  std::vector<OraclePhrase> out;
  for (const auto& p : ps) {
    std::string pk;
    for (const auto& f : p.fills) pk += f.package + ";";
    out.push_back({p.text, describe(p), pk});
  }
  return out;
}

inline double oracle_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    d += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return d / (std::sqrt(na) * std::sqrt(nb));
}

// Realizes every admissible filler combination, filters, orders and truncates.
inline std::vector<OraclePhrase> oracle_generate(const Bundle& b, const GenerationRequest& req) {
  const FrameAnalysis& fa = b.analysis(req.lemma);
  const PatternAnalysis* pa = fa.find_pattern(req.pattern_id);
  const RealizationPattern& pat = *pa->pattern;

  struct Cand {
    std::string lexeme;
    Number number;
    std::string package;
    long long freq;
  };
  std::vector<std::vector<Cand>> per_slot(pa->slots.size());
  for (const auto& [key, refs] : req.packages) {
    size_t si = key == "a" ? 0 : key == "b" ? 1 : pa->slots.size();
    for (size_t k = 0; k < pa->slots.size() && si == pa->slots.size(); ++k)
      if (pa->slots[k].str() == key) si = k;
    const SlotEvidence& ev = fa.evidence[pa->evidence.at(pa->slots[si])];
    std::map<std::pair<std::string, Number>, std::string> seen;
    for (const auto& ref : refs) {
      for (const auto& pk : ev.packages) {
        if (pk.grade.grade == ClassGrade::Excluded || pk.members.empty()) continue;
        auto alias = fa.profile->aliases.find(ref);
        bool hit = pk.cls.str() == ref || pk.label == ref ||
                   (alias != fa.profile->aliases.end() && alias->second == pk.cls);
        if (!hit) continue;
        for (const auto& m : pk.members)
          for (Number n : numbers_of(pk.number)) seen.emplace(std::make_pair(m, n), pk.cls.str());
        break;
      }
    }
    for (const auto& [k, pkg] : seen) {
      auto f = ev.frequency.find(k.first);
      per_slot[si].push_back({k.first, k.second, pkg, f == ev.frequency.end() ? 0 : f->second});
    }
    std::sort(per_slot[si].begin(), per_slot[si].end(), [](const Cand& x, const Cand& y) {
      return std::make_tuple(-x.freq, x.lexeme, x.number == Number::pl) <
             std::make_tuple(-y.freq, y.lexeme, y.number == Number::pl);
    });
  }

  auto realize = [&](const std::vector<const Cand*>& cs) {
    Binding bnd;
    bnd.head = fa.frame->inflection_ref;
    OraclePhrase ph;
    for (size_t i = 0; i < cs.size(); ++i) {
      bnd.fillers[pa->slots[i]] = cs[i]->lexeme;
      bnd.numbers[pa->slots[i]] = cs[i]->number;
      ph.fills += fmt::format("{}{}={}/{}", i ? ";" : "", pa->slots[i].str(), cs[i]->lexeme, to_string(cs[i]->number));
      ph.packages += cs[i]->package + ";";
    }
    ph.text = realize_np(pat, bnd, b.lexicon).text;
    return ph;
  };

  std::vector<OraclePhrase> out;
  if (per_slot.size() == 1) {
    for (const auto& c : per_slot[0]) {
      if (out.size() == static_cast<size_t>(req.limit)) break;
      out.push_back(realize({&c}));
    }
    return out;
  }
  std::vector<std::tuple<long long, size_t, OraclePhrase>> kept;
  for (const auto& x : per_slot[0])
    for (const auto& y : per_slot[1]) {
      if (b.vectors) {
        const auto* vx = b.vectors->find(x.lexeme);
        const auto* vy = b.vectors->find(y.lexeme);
        if (vx && vy && oracle_cosine(*vx, *vy) < req.threshold) continue;
      }
      kept.emplace_back(std::min(x.freq, y.freq), kept.size(), realize({&x, &y}));
    }
  std::sort(kept.begin(), kept.end(), [](const auto& p, const auto& q) {
    if (std::get<0>(p) != std::get<0>(q)) return std::get<0>(p) > std::get<0>(q);
    if (std::get<2>(p).text != std::get<2>(q).text) return std::get<2>(p).text < std::get<2>(q).text;
    return std::get<1>(p) < std::get<1>(q);
  });
  for (size_t i = 0; i < kept.size() && i < static_cast<size_t>(req.limit); ++i) out.push_back(std::get<2>(kept[i]));
  return out;
}

// Random small request: offered pattern, up to three packages of at most ten members per slot.
template <typename G>
std::optional<GenerationRequest> random_request(G& g, const DataStore& ds) {
  Language lang = g.pick(ds.languages());
  const Bundle& b = ds.bundle(lang);
  std::vector<std::string> lemmas;
  for (const auto& [l, _] : b.analyses) lemmas.push_back(l);
  const std::string& lemma = g.pick(lemmas);
  const FrameAnalysis& fa = b.analysis(lemma);
  std::vector<const PatternAnalysis*> offered;
  for (const auto& pa : fa.patterns)
    if (pa.grade != PatternGrade::Excluded) offered.push_back(&pa);
  if (offered.empty()) return std::nullopt;
  const PatternAnalysis* pa = g.pick(offered);

  GenerationRequest req;
  req.language = lang;
  req.lemma = lemma;
  req.pattern_id = pa->pattern->id;
  req.limit = g.integer(0, 40);
  req.seed = static_cast<std::uint64_t>(g.integer(0, 1 << 30));
  req.threshold = g.real(-0.3, 0.9);
  for (size_t i = 0; i < pa->slots.size(); ++i) {
    const SlotEvidence& ev = fa.evidence[pa->evidence.at(pa->slots[i])];
    std::vector<const PackageInfo*> small;
    for (const auto& pk : ev.packages)
      if (pk.grade.grade != ClassGrade::Excluded && !pk.members.empty() && pk.members.size() <= 10) small.push_back(&pk);
    if (small.empty()) return std::nullopt;
    std::vector<std::string> refs;
    for (const auto* pk : g.sample(small, static_cast<size_t>(g.integer(1, 3)))) {
      std::vector<std::string> names = {pk->cls.str()};
      if (!pk->label.empty()) names.push_back(pk->label);
      for (const auto& [alias, cls] : fa.profile->aliases)
        if (cls == pk->cls) names.push_back(alias);
      refs.push_back(g.pick(names));
    }
    std::string key = g.coin() ? pa->slots[i].str() : std::string(i == 0 ? "a" : "b");
    req.packages.emplace_back(key, refs);
  }
  if (g.coin()) std::reverse(req.packages.begin(), req.packages.end());
  return req;
}

}  // namespace valgen::testing
