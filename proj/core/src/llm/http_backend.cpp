// SPDX-License-Identifier: Apache-2.0
#include "middleware/llm/http_backend.hpp"

#include <httplib.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <regex>
#include <thread>

namespace mw::llm {

HttpBackend::HttpBackend(HttpConfig config) : config_(std::move(config)) {
    static const std::regex url(R"(^(https?)://([^/:]+)(:\d+)?(/.*)?$)", std::regex::icase);
    std::smatch m;
    if (!std::regex_match(config_.endpoint, m, url)) {
        throw BackendError("invalid endpoint URL '" + config_.endpoint + "'");
    }
    scheme_host_port_ = m[1].str() + "://" + m[2].str() + m[3].str();
    std::string prefix = m[4].str();
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    const bool has_version = prefix.size() >= 3 && prefix.compare(prefix.size() - 3, 3, "/v1") == 0;
    path_ = prefix + (has_version ? "/chat/completions" : "/v1/chat/completions");
}

std::string HttpBackend::request_body(const std::string& model, const std::vector<ChatMessage>& messages,
                                      const CompletionParams& params) {
    nlohmann::ordered_json body;
    body["model"] = model;
    body["messages"] = nlohmann::ordered_json::array();
    for (const auto& m : messages) {
        body["messages"].push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
    }
    body["temperature"] = params.temperature;
    body["max_tokens"] = params.max_output_tokens;
    if (!params.stop.empty()) body["stop"] = params.stop;
    return body.dump();
}

std::string HttpBackend::parse_response(const std::string& body) {
    const auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw ProtocolError("response body is not valid JSON");
    try {
        const auto& content = j.at("choices").at(0).at("message").at("content");
        if (content.is_null()) return {};
        return content.get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ProtocolError(std::string("unexpected response shape: ") + e.what());
    }
}

std::string HttpBackend::complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) {
    httplib::Client client(scheme_host_port_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());

    httplib::Headers headers;
    if (!config_.api_key_env.empty()) {
        if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }
    }
    const std::string body = request_body(config_.model, messages, params);

    int status = 0;
    std::string failure;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        if (attempt > 0) std::this_thread::sleep_for(config_.backoff_base * (1 << (attempt - 1)));
        auto res = client.Post(path_, headers, body, "application/json");
        if (!res) {
            status = 0;
            failure = "connection to " + scheme_host_port_ + " failed: " + httplib::to_string(res.error());
            continue;
        }
        status = res->status;
        if (status == 200) return parse_response(res->body);
        failure = "HTTP " + std::to_string(status) + " from " + scheme_host_port_ + path_;
        if (status != 429 && status < 500) break;
    }
    throw TransportError(status, failure);
}

}  // namespace mw::llm
