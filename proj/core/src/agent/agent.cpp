// SPDX-License-Identifier: Apache-2.0
#include "middleware/agent/agent.hpp"

#include <chrono>

#include "middleware/agent/prompt.hpp"
#include "middleware/text.hpp"
#include "middleware/tool_result.hpp"

namespace mw::agent {

namespace {

class EpisodeClock {
public:
    explicit EpisodeClock(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        if (!enabled_) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

// Sends one request and accounts for it. Returns nullopt after recording a
// backend failure in the trace.
std::optional<std::string> ask(llm::ChatBackend& backend, const std::vector<llm::ChatMessage>& messages,
                               const llm::CompletionParams& params, Trace& trace) {
    for (const auto& m : messages) trace.input_tokens += count_whitespace_tokens(m.content);
    ++trace.model_calls;
    try {
        return backend.complete(messages, params);
    } catch (const llm::BackendError& e) {
        trace.terminal = Terminal::kTransportError;
        trace.detail = e.what();
        return std::nullopt;
    }
}

std::string demonstration_for(const Environment& env, const AgentConfig& config) {
    return config.demonstration ? *config.demonstration : env.default_demonstration();
}

void check_config(const AgentConfig& config) {
    if (config.max_steps == 0) throw ConfigError("max_steps must be positive");
}

void abandon_step(Trace& trace, std::size_t t, std::vector<Attempt> attempts, std::string thought) {
    Step step;
    step.t = t;
    step.ok = false;
    Attempt last = std::move(attempts.back());
    attempts.pop_back();
    step.thought = thought.empty() ? std::move(last.thought) : std::move(thought);
    step.act = std::move(last.act);
    step.obs = std::move(last.obs);
    step.retries = std::move(attempts);
    trace.steps.push_back(std::move(step));
    trace.terminal = Terminal::kRetriesExhausted;
}

}  // namespace

Trace run_episode_error_feedback(const std::string& question, Environment& env, llm::ChatBackend& backend,
                                 const AgentConfig& config) {
    check_config(config);
    EpisodeClock clock(config.record_timing);
    Trace trace;
    trace.scheme = Scheme::kErrorFeedback;
    const auto demonstration = demonstration_for(env, config);

    for (std::size_t t = 1; t <= config.max_steps && trace.terminal == Terminal::kRunning; ++t) {
        std::vector<Attempt> attempts;
        while (true) {
            std::string context = serialize_context(env, question, demonstration, trace.steps, trace.scheme);
            for (const auto& a : attempts) context += "\n" + render_exchange(t, a.thought, a.act, a.obs);
            auto reply = ask(backend, {{llm::Role::kUser, context}}, config.params, trace);
            if (!reply) break;

            auto parsed = parse_step(*reply);
            Attempt attempt{parsed.thought, parsed.act_text, {}};
            StepOutcome outcome;
            if (!parsed.ok()) {
                outcome.observation = render_error(*parsed.error);
            } else if (parsed.final) {
                outcome = env.final_answer(parsed.final_payload);
            } else {
                attempt.act = env.render_action(*parsed.call);
                outcome = env.act(*parsed.call);
            }
            attempt.obs = outcome.observation;

            if (outcome.ok) {
                trace.steps.push_back(
                    Step{t, std::move(attempt.thought), std::move(attempt.act), std::move(attempt.obs), true,
                         std::move(attempts)});
                if (outcome.terminal) {
                    trace.terminal = Terminal::kFinalAnswer;
                    trace.answer = std::move(outcome.answer);
                }
                break;
            }
            attempts.push_back(std::move(attempt));
            if (attempts.size() > config.max_retries) {
                abandon_step(trace, t, std::move(attempts), {});
                break;
            }
        }
    }
    if (trace.terminal == Terminal::kRunning) trace.terminal = Terminal::kBudgetExhausted;
    trace.wall_ms = clock.elapsed_ms();
    return trace;
}

Trace run_episode_decoupled(const std::string& question, KbEnvironment& env, llm::ChatBackend& backend,
                            const AgentConfig& config) {
    check_config(config);
    EpisodeClock clock(config.record_timing);
    Trace trace;
    trace.scheme = Scheme::kDecoupled;
    const auto demonstration = demonstration_for(env, config);

    auto thought_params = config.params;
    thought_params.stop.push_back("\nAct");
    auto select_params = config.params;
    select_params.stop.clear();

    for (std::size_t t = 1; t <= config.max_steps && trace.terminal == Terminal::kRunning; ++t) {
        const auto context = serialize_context(env, question, demonstration, trace.steps, trace.scheme);
        auto thought_reply = ask(backend, {{llm::Role::kUser, context + "\nThought " + std::to_string(t) + ":"}},
                                 thought_params, trace);
        if (!thought_reply) break;
        const auto thought = parse_thought(*thought_reply);

        const auto candidates = env.candidates();
        std::vector<std::string> texts;
        texts.reserve(candidates.size());
        for (const auto& c : candidates) texts.push_back(c.render());

        std::vector<llm::ChatMessage> messages{{llm::Role::kUser, selection_prompt(thought, texts)}};
        std::vector<Attempt> attempts;
        std::optional<std::size_t> chosen;
        while (true) {
            auto reply = ask(backend, messages, select_params, trace);
            if (!reply) break;
            auto selection = parse_selection(*reply, texts);
            if (selection.index) {
                chosen = selection.index;
                break;
            }
            const auto obs = render_error(ToolError{ToolErrorCode::kRejected, selection.error});
            attempts.push_back({{}, std::string(trim(*reply)), obs});
            if (attempts.size() > config.max_retries) break;
            messages.push_back({llm::Role::kAssistant, *reply});
            messages.push_back({llm::Role::kUser, obs});
        }
        if (trace.terminal != Terminal::kRunning) break;
        if (!chosen) {
            abandon_step(trace, t, std::move(attempts), thought);
            break;
        }

        const auto& action = candidates[*chosen];
        auto outcome = env.act(action.to_call());
        trace.steps.push_back(Step{t, thought, texts[*chosen], outcome.observation, outcome.ok, std::move(attempts)});
        if (outcome.terminal) {
            trace.terminal = Terminal::kFinalAnswer;
            trace.answer = std::move(outcome.answer);
        } else if (!outcome.ok) {
            trace.terminal = Terminal::kRetriesExhausted;
        }
    }
    if (trace.terminal == Terminal::kRunning) trace.terminal = Terminal::kBudgetExhausted;
    trace.wall_ms = clock.elapsed_ms();
    return trace;
}

Trace run_episode(const std::string& question, Environment& env, llm::ChatBackend& backend,
                  const AgentConfig& config) {
    if (config.scheme == Scheme::kDecoupled) {
        auto* kb_env = dynamic_cast<KbEnvironment*>(&env);
        if (kb_env == nullptr) {
            throw ConfigError("decoupled generation is only available for the knowledge-base environment");
        }
        return run_episode_decoupled(question, *kb_env, backend, config);
    }
    return run_episode_error_feedback(question, env, backend, config);
}

}  // namespace mw::agent
