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

#ifndef DIVAN_CORE_TRANSPORT_HPP_
#define DIVAN_CORE_TRANSPORT_HPP_

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace divan {

struct HttpRequest {
  std::string url;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
  std::chrono::seconds timeout{60};
};

/// status == 0 means the request never produced an HTTP response; `error`
/// then says why.
struct HttpResponse {
  int status = 0;
  std::string body;
  std::string error;
};

class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual HttpResponse post(const HttpRequest& request) = 0;
};

/// cpp-httplib backed transport. https:// URLs need the OpenSSL build.
std::shared_ptr<ChatTransport> make_http_transport();

}  // namespace divan

#endif  // DIVAN_CORE_TRANSPORT_HPP_
