// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "middleware/llm/backend.hpp"

namespace mw::llm {

/// Record/replay cache over another backend. The store is an append-only
/// JSON-lines file of {"key", "response"}; keys are SHA-256 over the
/// canonical JSON of (salt, messages, params).
class CachedBackend : public ChatBackend {
public:
    CachedBackend(std::shared_ptr<ChatBackend> inner, std::filesystem::path store, std::string salt = {});

    std::string complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) override;

    std::size_t hits() const;
    std::size_t misses() const;

    static std::string cache_key(const std::vector<ChatMessage>& messages, const CompletionParams& params,
                                 const std::string& salt = {});

private:
    std::shared_ptr<std::mutex> key_lock(const std::string& key);

    std::shared_ptr<ChatBackend> inner_;
    std::filesystem::path store_;
    std::string salt_;
    mutable std::mutex mutex_;  // guards entries_, locks_, counters and the file
    std::map<std::string, std::string> entries_;
    std::map<std::string, std::shared_ptr<std::mutex>> locks_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace mw::llm
