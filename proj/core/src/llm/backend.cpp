// SPDX-License-Identifier: Apache-2.0
#include "middleware/llm/backend.hpp"

namespace mw::llm {

std::string_view to_string(Role role) {
    switch (role) {
        case Role::kSystem: return "system";
        case Role::kUser: return "user";
        case Role::kAssistant: return "assistant";
    }
    return "user";
}

std::string ScriptedBackend::complete(const std::vector<ChatMessage>& messages, const CompletionParams&) {
    std::lock_guard lock(mutex_);
    requests_.push_back(messages);
    if (next_ >= responses_.size()) {
        throw ScriptExhausted("scripted backend exhausted after " + std::to_string(responses_.size()) + " responses");
    }
    return responses_[next_++];
}

std::size_t ScriptedBackend::calls() const {
    std::lock_guard lock(mutex_);
    return requests_.size();
}

std::size_t ScriptedBackend::remaining() const {
    std::lock_guard lock(mutex_);
    return responses_.size() - next_;
}

std::vector<std::vector<ChatMessage>> ScriptedBackend::requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
}

std::string MarkerScriptedBackend::complete(const std::vector<ChatMessage>& messages, const CompletionParams&) {
    std::lock_guard lock(mutex_);
    const std::string& last = messages.empty() ? std::string() : messages.back().content;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!used_[i] && last.find(entries_[i].marker) != std::string::npos) {
            used_[i] = true;
            return entries_[i].response;
        }
    }
    throw ScriptExhausted("no scripted response matches the prompt");
}

}  // namespace mw::llm
