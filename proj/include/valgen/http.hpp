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

#include <filesystem>
#include <optional>
#include <string>

#include <httplib.h>

#include "valgen/service.hpp"

namespace valgen {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> static_dir;  // mounted at "/"
};

// Registers the /v1 routes (and the static mount) on `server`.
void install_routes(httplib::Server& server, const Service& service,
                    const std::optional<std::filesystem::path>& static_dir = std::nullopt);

// Blocks until the server stops.
bool serve(const Service& service, const ServerOptions& options);

}  // namespace valgen
