// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <string>

#include "middleware/llm/backend.hpp"

namespace mw::llm {

struct HttpConfig {
    /// Base URL, e.g. "http://localhost:8000" or "https://api.openai.com/v1".
    /// Requests go to <base>/v1/chat/completions (the /v1 is not doubled).
    std::string endpoint;
    std::string model;
    /// Environment variable holding the bearer token; unset means no
    /// Authorization header (local servers).
    std::string api_key_env = "OPENAI_API_KEY";
    std::chrono::milliseconds timeout{60'000};
    int max_retries = 4;
    std::chrono::milliseconds backoff_base{500};
};

/// OpenAI-compatible chat-completions client. Retries 429 and 5xx responses
/// and connection failures with exponential backoff.
class HttpBackend : public ChatBackend {
public:
    explicit HttpBackend(HttpConfig config);

    std::string complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) override;

    const HttpConfig& config() const { return config_; }

    static std::string request_body(const std::string& model, const std::vector<ChatMessage>& messages,
                                    const CompletionParams& params);
    /// Extracts choices[0].message.content; throws ProtocolError.
    static std::string parse_response(const std::string& body);

private:
    HttpConfig config_;
    std::string scheme_host_port_;
    std::string path_;
};

}  // namespace mw::llm
