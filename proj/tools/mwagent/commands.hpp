// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "middleware/agent/trace.hpp"

namespace mwagent {

enum ExitCode : int { kOk = 0, kUsage = 1, kConfigError = 2, kIoError = 3, kTransportError = 4 };

/// Entry point shared by main() and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Human-readable trace. Rejected actions are prefixed with RETRY, the action
/// of an abandoned step with FAILED.
std::string render_trace(const mw::agent::Trace& trace, const std::string& name,
                         std::optional<std::size_t> step = std::nullopt);

}  // namespace mwagent
