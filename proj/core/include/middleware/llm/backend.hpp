// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mw::llm {

enum class Role { kSystem, kUser, kAssistant };

std::string_view to_string(Role role);

struct ChatMessage {
    Role role = Role::kUser;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

struct CompletionParams {
    double temperature = 0.0;
    int max_output_tokens = 512;
    std::vector<std::string> stop;

    bool operator==(const CompletionParams&) const = default;
};

class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connection failures (status 0) and non-success HTTP statuses.
class TransportError : public BackendError {
public:
    TransportError(int status, const std::string& message) : BackendError(message), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

/// The server answered, but not with a chat-completion body.
class ProtocolError : public BackendError {
public:
    using BackendError::BackendError;
};

class ScriptExhausted : public BackendError {
public:
    using BackendError::BackendError;
};

/// Completion backend. Implementations must tolerate concurrent calls.
class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    virtual std::string complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) = 0;
};

/// Replays a fixed list of responses in order.
class ScriptedBackend : public ChatBackend {
public:
    explicit ScriptedBackend(std::vector<std::string> responses) : responses_(std::move(responses)) {}

    std::string complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) override;

    std::size_t calls() const;
    std::size_t remaining() const;
    std::vector<std::vector<ChatMessage>> requests() const;

private:
    mutable std::mutex mutex_;
    std::vector<std::string> responses_;
    std::size_t next_ = 0;
    std::vector<std::vector<ChatMessage>> requests_;
};

/// Returns the first unused response whose marker occurs in the last message.
class MarkerScriptedBackend : public ChatBackend {
public:
    struct Entry {
        std::string marker;
        std::string response;
    };

    explicit MarkerScriptedBackend(std::vector<Entry> entries) : entries_(std::move(entries)), used_(entries_.size()) {}

    std::string complete(const std::vector<ChatMessage>& messages, const CompletionParams& params) override;

private:
    std::mutex mutex_;
    std::vector<Entry> entries_;
    std::vector<bool> used_;
};

}  // namespace mw::llm
