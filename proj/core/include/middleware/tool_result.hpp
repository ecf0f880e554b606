// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mw {

/// Appended to every error observation under error feedback.
inline constexpr std::string_view kRetryInstruction = "Please fix the error and try again.";

enum class ToolErrorCode {
    kUnknownTool,
    kBadArity,
    kUnknownArgument,
    kPrerequisiteViolation,
    kTypeMismatch,
    kNonNumericAttribute,
    kSyntax,         // the action text does not follow the tool grammar
    kPrecondition,   // argument value outside the tool's domain
    kEngine,         // verbatim database engine message
    kRejected,       // write statements, multiple statements
    kNoExample,
};

std::string_view to_string(ToolErrorCode code);

struct ToolError {
    ToolErrorCode code;
    std::string message;
};

struct ToolResult {
    std::string observation;
    std::optional<ToolError> error;

    bool ok() const { return !error.has_value(); }

    static ToolResult success(std::string observation) { return {std::move(observation), std::nullopt}; }
    static ToolResult failure(ToolErrorCode code, std::string message);
};

/// `Error: <message> Please fix the error and try again.`
std::string render_error(const ToolError& error);

}  // namespace mw
