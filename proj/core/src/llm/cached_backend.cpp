// SPDX-License-Identifier: Apache-2.0
#include "middleware/llm/cached_backend.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

namespace mw::llm {

namespace {

std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr);
    std::string out;
    out.reserve(length * 2);
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        out += buf;
    }
    return out;
}

}  // namespace

CachedBackend::CachedBackend(std::shared_ptr<ChatBackend> inner, std::filesystem::path store, std::string salt)
    : inner_(std::move(inner)), store_(std::move(store)), salt_(std::move(salt)) {
    std::ifstream in(store_);
    std::string line;
    while (std::getline(in, line)) {
        // A torn final line from an interrupted run is skipped.
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("response")) continue;
        if (!j["key"].is_string() || !j["response"].is_string()) continue;
        entries_[j["key"].get<std::string>()] = j["response"].get<std::string>();
    }
}

std::string CachedBackend::cache_key(const std::vector<ChatMessage>& messages, const CompletionParams& params,
                                     const std::string& salt) {
    nlohmann::ordered_json j;
    j["salt"] = salt;
    j["messages"] = nlohmann::ordered_json::array();
    for (const auto& m : messages) {
        j["messages"].push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
    }
    j["params"] = {{"temperature", params.temperature},
                   {"max_output_tokens", params.max_output_tokens},
                   {"stop", params.stop}};
    return sha256_hex(j.dump());
}

std::shared_ptr<std::mutex> CachedBackend::key_lock(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto& slot = locks_[key];
    if (!slot) slot = std::make_shared<std::mutex>();
    return slot;
}

std::string CachedBackend::complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) {
    const std::string key = cache_key(messages, params, salt_);
    const auto per_key = key_lock(key);
    std::lock_guard key_guard(*per_key);
    {
        std::lock_guard lock(mutex_);
        if (const auto it = entries_.find(key); it != entries_.end()) {
            ++hits_;
            return it->second;
        }
    }
    std::string response = inner_->complete(messages, params);
    std::lock_guard lock(mutex_);
    ++misses_;
    entries_[key] = response;
    std::ofstream out(store_, std::ios::app);
    out << nlohmann::json{{"key", key}, {"response", response}}.dump() << '\n';
    return response;
}

std::size_t CachedBackend::hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
}

std::size_t CachedBackend::misses() const {
    std::lock_guard lock(mutex_);
    return misses_;
}

}  // namespace mw::llm
