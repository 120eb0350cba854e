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

#include "valgen/http.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace valgen {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

std::string param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw BadRequest(fmt::format("missing parameter '{}'", name));
  return req.get_param_value(name);
}

std::string optional_param(const httplib::Request& req, const char* name) {
  return req.has_param(name) ? req.get_param_value(name) : std::string();
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) throw BadRequest("empty request body");
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw BadRequest(fmt::format("malformed JSON body: {}", e.what()));
  }
}

bool flag(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return false;
  const std::string v = req.get_param_value(name);
  return v == "1" || v == "true";
}

template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      res.status = http_status(e.kind());
      res.set_content(error_json(e).dump(), kJson);
    } catch (const std::exception& e) {
      spdlog::error("{} {}: {}", req.method, req.path, e.what());
      res.status = 500;
      res.set_content(json{{"error", "internal"}, {"message", e.what()}}.dump(), kJson);
    }
  };
}

void reply(httplib::Response& res, const json& j) { res.set_content(j.dump(), kJson); }

}  // namespace

void install_routes(httplib::Server& server, const Service& service,
                    const std::optional<std::filesystem::path>& static_dir) {
  const Service* s = &service;

  server.Get("/v1/languages", guarded([s](const auto&, auto& res) { reply(res, s->languages()); }));
  server.Get("/v1/nouns", guarded([s](const auto& req, auto& res) { reply(res, s->nouns(param(req, "lang"))); }));
  server.Get("/v1/structures", guarded([s](const auto& req, auto& res) {
               reply(res, s->structures(param(req, "lang"), param(req, "noun")));
             }));
  server.Get("/v1/packages", guarded([s](const auto& req, auto& res) {
               reply(res, s->packages(param(req, "lang"), param(req, "noun"), param(req, "pattern"),
                                      optional_param(req, "slot")));
             }));
  server.Post("/v1/generate", guarded([s](const auto& req, auto& res) {
                reply(res, s->generate(parse_body(req), flag(req, "trace")));
              }));

  auto do_export = guarded([s](const httplib::Request& req, httplib::Response& res) {
    const std::string name = req.has_param("format") ? req.get_param_value("format") : "json";
    auto format = parse_export_format(name);
    if (!format) throw BadRequest(fmt::format("unknown export format: {}", name));
    std::string body = s->export_phrases(parse_body(req), *format);
    res.set_content(body, *format == ExportFormat::json ? kJson : "text/csv; charset=utf-8");
  });
  server.Get("/v1/export", do_export);
  server.Post("/v1/export", do_export);

  server.Get("/v1/grades", guarded([s](const auto& req, auto& res) {
               reply(res, s->grades(param(req, "lang"), param(req, "noun")));
             }));
  server.Get("/v1/contrast", guarded([s](const auto& req, auto& res) {
               reply(res, s->contrast(param(req, "lang"), param(req, "lexeme"), param(req, "a"), param(req, "b")));
             }));
  server.Get("/v1/neighbors", guarded([s](const auto& req, auto& res) {
               int k = 10;
               if (req.has_param("k")) {
                 try {
                   k = std::stoi(req.get_param_value("k"));
                 } catch (const std::exception&) {
                   throw BadRequest("parameter 'k' must be an integer");
                 }
               }
               reply(res, s->neighbors(param(req, "lang"), param(req, "word"), k));
             }));

  if (static_dir) {
    if (!server.set_mount_point("/", static_dir->string()))
      spdlog::warn("static directory {} not found; UI not served", static_dir->string());
  }

  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const char* code = res.status == 404 ? "not_found" : "http_error";
    res.set_content(json{{"error", code}, {"message", fmt::format("{} {}", req.method, req.path)}}.dump(), kJson);
  });
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::info("{} {} -> {}", req.method, req.path, res.status);
  });
}

bool serve(const Service& service, const ServerOptions& options) {
  httplib::Server server;
  install_routes(server, service, options.static_dir);
  spdlog::info("listening on {}:{}", options.host, options.port);
  return server.listen(options.host, options.port);
}

}  // namespace valgen
