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

#include "valgen/ontology.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "valgen/error.hpp"

namespace valgen {

namespace {

// Two-byte sequences C3 80..C3 9E cover À..Þ; C3 97 is the multiplication sign.
bool is_upper_latin1(unsigned char a, unsigned char b) { return a == 0xC3 && b >= 0x80 && b <= 0x9E && b != 0x97; }
bool is_lower_latin1(unsigned char a, unsigned char b) { return a == 0xC3 && b >= 0xA0 && b <= 0xBE && b != 0xB7; }

}  // namespace

std::string lowercase_utf8(std::string_view s) {
  std::string out(s);
  for (size_t i = 0; i < out.size(); ++i) {
    auto c = static_cast<unsigned char>(out[i]);
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c + 32);
    } else if (i + 1 < out.size() && is_upper_latin1(c, static_cast<unsigned char>(out[i + 1]))) {
      out[i + 1] = static_cast<char>(static_cast<unsigned char>(out[i + 1]) + 0x20);
      ++i;
    }
  }
  return out;
}

std::string lower_first(std::string_view s) {
  std::string out(s);
  if (out.empty()) return out;
  auto c = static_cast<unsigned char>(out[0]);
  if (c >= 'A' && c <= 'Z') out[0] = static_cast<char>(c + 32);
  else if (out.size() > 1 && is_upper_latin1(c, static_cast<unsigned char>(out[1])))
    out[1] = static_cast<char>(static_cast<unsigned char>(out[1]) + 0x20);
  return out;
}

std::string upper_first(std::string_view s) {
  std::string out(s);
  if (out.empty()) return out;
  auto c = static_cast<unsigned char>(out[0]);
  if (c >= 'a' && c <= 'z') out[0] = static_cast<char>(c - 32);
  else if (out.size() > 1 && is_lower_latin1(c, static_cast<unsigned char>(out[1])))
    out[1] = static_cast<char>(static_cast<unsigned char>(out[1]) - 0x20);
  return out;
}

ClassPath::ClassPath(std::vector<std::string> segs) {
  for (auto& s : segs) segments.push_back(lowercase_utf8(s));
}

ClassPath ClassPath::parse(std::string_view dotted) {
  ClassPath p;
  size_t start = 0;
  while (start <= dotted.size()) {
    size_t dot = dotted.find('.', start);
    if (dot == std::string_view::npos) dot = dotted.size();
    auto seg = dotted.substr(start, dot - start);
    if (!seg.empty()) p.segments.push_back(lowercase_utf8(seg));
    start = dot + 1;
  }
  return p;
}

std::string ClassPath::str() const { return fmt::format("{}", fmt::join(segments, ".")); }

bool ClassPath::is_prefix_of(const ClassPath& other) const {
  if (segments.size() > other.segments.size()) return false;
  return std::equal(segments.begin(), segments.end(), other.segments.begin());
}

std::optional<ClassPath> ClassPath::parent() const {
  if (segments.size() <= 1) return std::nullopt;
  return ClassPath(std::vector<std::string>(segments.begin(), segments.end() - 1));
}

Ontology Ontology::from_json(const json& doc) {
  Ontology onto;
  if (!doc.is_object()) throw SchemaError("ontology: expected an object");
  if (auto it = doc.find("language"); it != doc.end()) {
    if (!it->is_string()) throw SchemaError("ontology: 'language' must be a string");
    auto lang = parse_language(it->get<std::string>());
    if (!lang) throw SchemaError(fmt::format("ontology: unknown language '{}'", it->get<std::string>()));
    onto.language_ = lang;
  }
  auto nodes = doc.find("nodes");
  if (nodes == doc.end() || !nodes->is_array()) throw SchemaError("ontology: 'nodes' must be an array");
  for (size_t i = 0; i < nodes->size(); ++i) {
    const json& n = (*nodes)[i];
    std::string where = fmt::format("ontology nodes[{}]", i);
    if (!n.is_object()) throw SchemaError(where + ": expected an object");
    auto path = n.find("path");
    if (path == n.end() || !path->is_array() || path->empty())
      throw SchemaError(where + ": 'path' must be a non-empty array");
    std::vector<std::string> segs;
    for (const auto& s : *path) {
      if (!s.is_string() || s.get<std::string>().empty())
        throw SchemaError(where + ": path labels must be non-empty strings");
      segs.push_back(s.get<std::string>());
    }
    OntologyNode node;
    node.path = ClassPath(segs);
    node.parent = node.path.parent();
    std::set<std::string> members;
    if (auto m = n.find("members"); m != n.end()) {
      if (!m->is_array()) throw SchemaError(where + ": 'members' must be an array");
      for (const auto& x : *m) {
        if (!x.is_string()) throw SchemaError(where + ": members must be strings");
        members.insert(x.get<std::string>());
      }
    }
    node.members.assign(members.begin(), members.end());
    if (auto t = n.find("tags"); t != n.end()) {
      if (!t->is_object()) throw SchemaError(where + ": 'tags' must be an object");
      node.tags = *t;
    }
    ClassPath key = node.path;
    if (!onto.nodes_.emplace(key, std::move(node)).second)
      throw DuplicatePath(fmt::format("ontology: duplicate path {}", key.str()));
  }
  for (const auto& [p, node] : onto.nodes_) {
    if (node.parent && !onto.nodes_.count(*node.parent))
      throw OrphanNode(fmt::format("ontology: parent {} of {} is missing", node.parent->str(), p.str()));
    for (const auto& m : node.members) onto.by_member_[m].push_back(p);
  }
  return onto;
}

const OntologyNode* Ontology::find(const ClassPath& p) const {
  auto it = nodes_.find(p);
  return it == nodes_.end() ? nullptr : &it->second;
}

std::vector<ClassPath> Ontology::roots() const {
  std::vector<ClassPath> out;
  for (const auto& [p, n] : nodes_)
    if (!n.parent) out.push_back(p);
  return out;
}

std::vector<ClassPath> Ontology::children(const ClassPath& p) const {
  std::vector<ClassPath> out;
  for (const auto& [q, n] : nodes_)
    if (n.parent && *n.parent == p) out.push_back(q);
  return out;
}

size_t Ontology::member_count() const {
  size_t n = 0;
  for (const auto& [p, node] : nodes_) n += node.members.size();
  return n;
}

std::vector<std::string> Ontology::lexemes() const {
  std::vector<std::string> out;
  for (const auto& [m, paths] : by_member_) out.push_back(m);
  return out;
}

const std::vector<ClassPath>& Ontology::paths_of(const std::string& lexeme) const {
  static const std::vector<ClassPath> kEmpty;
  auto it = by_member_.find(lexeme);
  return it == by_member_.end() ? kEmpty : it->second;
}

Ontology load_ontology(const std::filesystem::path& path) { return Ontology::from_json(read_json_file(path)); }

bool subsumes(const ClassPath& ancestor, const ClassPath& descendant, const Ontology& onto) {
  if (!onto.contains(ancestor)) throw UnknownPath(fmt::format("unknown class path {}", ancestor.str()));
  if (!onto.contains(descendant)) throw UnknownPath(fmt::format("unknown class path {}", descendant.str()));
  return ancestor.is_prefix_of(descendant);
}

std::vector<ClassPath> classify_lexeme(const std::string& lexeme, const Ontology& onto) {
  return onto.paths_of(lexeme);
}

std::vector<std::string> expand_class(const ClassPath& query, const Ontology& onto,
                                      const std::map<std::string, long long>* frequency) {
  if (!onto.contains(query)) throw UnknownPath(fmt::format("unknown class path {}", query.str()));
  std::set<std::string> members;
  for (auto it = onto.nodes().lower_bound(query); it != onto.nodes().end() && query.is_prefix_of(it->first); ++it)
    members.insert(it->second.members.begin(), it->second.members.end());
  std::vector<std::string> out(members.begin(), members.end());
  if (frequency) {
    auto freq = [&](const std::string& w) {
      auto f = frequency->find(w);
      return f == frequency->end() ? 0LL : f->second;
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const std::string& a, const std::string& b) { return freq(a) > freq(b); });
  }
  return out;
}

}  // namespace valgen
