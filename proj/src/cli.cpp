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

#include "valgen/cli.hpp"

#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "valgen/http.hpp"
#include "valgen/service.hpp"

namespace valgen {

namespace {

void setup_logging(const std::string& level) {
  static bool installed = false;
  if (!installed) {
    auto logger = spdlog::stderr_color_mt("valgen");
    spdlog::set_default_logger(logger);
    installed = true;
  }
  spdlog::set_level(spdlog::level::from_str(level));
}

json packages_body(const std::vector<std::string>& flags) {
  json packages = json::object();
  for (const auto& f : flags) {
    auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == f.size())
      throw BadRequest(fmt::format("--package expects slot=package, got '{}'", f));
    packages[f.substr(0, eq)].push_back(f.substr(eq + 1));
  }
  return packages;
}

void print_text(std::ostream& out, const json& response) {
  for (const auto& p : response["phrases"]) {
    out << p["text"].get<std::string>();
    if (!p["scores"]["similarity"].is_null()) out << fmt::format("\t{:.6f}", p["scores"]["similarity"].get<double>());
    out << '\n';
  }
  const json& st = response["stats"];
  out << fmt::format("# generated={} filtered={} truncated={}\n", st["generated"].get<int>(),
                     st["filtered"].get<int>(), st["truncated"].get<int>());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const DataStore* preloaded) {
  CLI::App app{"Valency-driven noun-phrase generator", "valgen"};
  app.require_subcommand(1);
  std::optional<std::string> data_dir;
  std::string log_level = "warn";
  app.add_option("--data-dir", data_dir, "data directory (default: $VALGEN_DATA_DIR, then ./data)");
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  std::string lang, noun, pattern, slot, format = "json", lexeme, frame_a, frame_b, word;
  std::vector<std::string> package_flags;
  long long limit = 20;
  std::uint64_t seed = 0;
  double threshold = kDefaultThreshold;
  bool adjectives = false, trace = false;
  int k = 10;

  auto* c_languages = app.add_subcommand("languages", "list loaded languages");
  auto* c_nouns = app.add_subcommand("nouns", "list valency nouns of a language");
  c_nouns->add_option("--lang", lang)->required();
  auto* c_structures = app.add_subcommand("structures", "list offered realization patterns");
  c_structures->add_option("--lang", lang)->required();
  c_structures->add_option("--noun", noun)->required();
  auto* c_packages = app.add_subcommand("packages", "list semantic packages of a pattern slot");
  c_packages->add_option("--lang", lang)->required();
  c_packages->add_option("--noun", noun)->required();
  c_packages->add_option("--pattern", pattern)->required();
  c_packages->add_option("--slot", slot, "a, b or ArgN.M");

  auto* c_generate = app.add_subcommand("generate", "generate phrases");
  c_generate->add_option("--lang", lang)->required();
  c_generate->add_option("--noun", noun)->required();
  c_generate->add_option("--pattern", pattern)->required();
  c_generate->add_option("--package", package_flags, "slot=package (repeatable)")->required();
  c_generate->add_option("--limit", limit);
  c_generate->add_option("--seed", seed);
  c_generate->add_option("--threshold", threshold);
  c_generate->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text", "response"}));
  c_generate->add_flag("--adjectives", adjectives, "fill optional adjective slots");
  c_generate->add_flag("--trace", trace, "include derivation traces (response format)");

  auto* c_grades = app.add_subcommand("grades", "prototypicality grades of a frame");
  c_grades->add_option("--lang", lang)->required();
  c_grades->add_option("--noun", noun)->required();
  auto* c_contrast = app.add_subcommand("contrast", "compare a filler across two frames");
  c_contrast->add_option("--lang", lang)->required();
  c_contrast->add_option("--lexeme", lexeme)->required();
  c_contrast->add_option("--a", frame_a)->required();
  c_contrast->add_option("--b", frame_b)->required();
  auto* c_neighbors = app.add_subcommand("neighbors", "nearest neighbours in the vector store");
  c_neighbors->add_option("--lang", lang)->required();
  c_neighbors->add_option("--word", word)->required();
  c_neighbors->add_option("-k", k);

  std::string corpus, out_path;
  SkipGramConfig sg;
  auto* c_train = app.add_subcommand("train", "train skip-gram vectors on a tokenized corpus");
  c_train->add_option("--corpus", corpus)->required();
  c_train->add_option("--out", out_path)->required();
  c_train->add_option("--dims", sg.dims);
  c_train->add_option("--window", sg.window);
  c_train->add_option("--negatives", sg.negatives);
  c_train->add_option("--epochs", sg.epochs);
  c_train->add_option("--seed", sg.seed);
  c_train->add_option("--learning-rate", sg.learning_rate);

  ServerOptions server;
  std::string static_dir;
  auto* c_serve = app.add_subcommand("serve", "run the HTTP API");
  c_serve->add_option("--host", server.host);
  c_serve->add_option("--port", server.port);
  c_serve->add_option("--static", static_dir, "directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  setup_logging(log_level);

  try {
    if (c_train->parsed()) {
      VectorStore store = train_skipgram(corpus, sg);
      save_vectors(store, out_path);
      out << json{{"words", store.words().size()}, {"dims", store.dimension()}, {"out", out_path}}.dump(2) << '\n';
      return 0;
    }

    std::unique_ptr<DataStore> owned;
    const DataStore* store = preloaded;
    if (!store) {
      owned = std::make_unique<DataStore>(DataStore::load(resolve_data_dir(data_dir)));
      store = owned.get();
    }
    Service service(*store);

    json result;
    if (c_languages->parsed()) {
      result = service.languages();
    } else if (c_nouns->parsed()) {
      result = service.nouns(lang);
    } else if (c_structures->parsed()) {
      result = service.structures(lang, noun);
    } else if (c_packages->parsed()) {
      result = service.packages(lang, noun, pattern, slot);
    } else if (c_generate->parsed()) {
      if (limit < 0) throw BadRequest("limit must be >= 0");
      json body = {{"language", lang},   {"noun", noun},         {"pattern", pattern},
                   {"packages", packages_body(package_flags)}, {"limit", limit},
                   {"seed", seed},       {"threshold", threshold}, {"include_adjectives", adjectives}};
      if (format == "csv" || format == "json") {
        out << service.export_phrases(body, format == "csv" ? ExportFormat::csv : ExportFormat::json);
        if (format == "json") out << '\n';
        return 0;
      }
      json response = service.generate(body, trace);
      if (format == "text") {
        print_text(out, response);
        return 0;
      }
      result = std::move(response);
    } else if (c_grades->parsed()) {
      result = service.grades(lang, noun);
    } else if (c_contrast->parsed()) {
      result = service.contrast(lang, lexeme, frame_a, frame_b);
    } else if (c_neighbors->parsed()) {
      result = service.neighbors(lang, word, k);
    } else if (c_serve->parsed()) {
      if (!static_dir.empty()) server.static_dir = static_dir;
      return serve(service, server) ? 0 : 3;
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace valgen
