// SPDX-License-Identifier: Apache-2.0
//
// The reasoning loop: model output is parsed into an action, executed against
// the environment and its observation appended to the context.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "middleware/agent/environment.hpp"
#include "middleware/agent/trace.hpp"
#include "middleware/llm/backend.hpp"

namespace mw::agent {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AgentConfig {
    Scheme scheme = Scheme::kErrorFeedback;
    std::size_t max_steps = 15;
    std::size_t max_retries = 3;
    llm::CompletionParams params{0.0, 512, {"\nObservation"}};
    /// Replaces the environment's default demonstration; an empty string
    /// gives a zero-shot prompt.
    std::optional<std::string> demonstration;
    /// Off keeps wall_ms at 0 so scripted runs produce identical traces.
    bool record_timing = false;
};

/// Tool or parse errors are fed back with the retry instruction and the model
/// is asked again within the same step.
Trace run_episode_error_feedback(const std::string& question, Environment& env, llm::ChatBackend& backend,
                                 const AgentConfig& config);

/// Each step asks for a thought in the main context, then picks the action
/// from the enumerated candidates in a separate prompt.
Trace run_episode_decoupled(const std::string& question, KbEnvironment& env, llm::ChatBackend& backend,
                            const AgentConfig& config);

/// Dispatches on config.scheme. Throws ConfigError for decoupled generation
/// outside the knowledge-base environment.
Trace run_episode(const std::string& question, Environment& env, llm::ChatBackend& backend,
                  const AgentConfig& config);

}  // namespace mw::agent
