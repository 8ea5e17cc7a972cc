// Copyright 2026 The Divan Authors
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

#include "core/transport.hpp"

#include <httplib.h>

namespace divan {

namespace {

class HttplibTransport final : public ChatTransport {
 public:
  HttpResponse post(const HttpRequest& request) override {
    const auto scheme_end = request.url.find("://");
    if (scheme_end == std::string::npos) return {0, {}, "url has no scheme: " + request.url};
    const auto path_begin = request.url.find('/', scheme_end + 3);
    const std::string origin = request.url.substr(0, path_begin);
    const std::string path = path_begin == std::string::npos ? "/" : request.url.substr(path_begin);

    httplib::Client client(origin);
    if (!client.is_valid()) return {0, {}, "unsupported endpoint " + origin};
    const auto secs = static_cast<time_t>(request.timeout.count());
    client.set_connection_timeout(secs, 0);
    client.set_read_timeout(secs, 0);
    client.set_write_timeout(secs, 0);

    httplib::Headers headers;
    for (const auto& [k, v] : request.headers) headers.emplace(k, v);
    auto result = client.Post(path, headers, request.body, "application/json");
    if (!result) return {0, {}, httplib::to_string(result.error())};
    return {result->status, result->body, {}};
  }
};

}  // namespace

std::shared_ptr<ChatTransport> make_http_transport() { return std::make_shared<HttplibTransport>(); }

}  // namespace divan
