// SPDX-License-Identifier: Apache-2.0
#include "middleware/tool_result.hpp"

namespace mw {

std::string_view to_string(ToolErrorCode code) {
    switch (code) {
        case ToolErrorCode::kUnknownTool: return "unknown-tool";
        case ToolErrorCode::kBadArity: return "bad-arity";
        case ToolErrorCode::kUnknownArgument: return "unknown-argument";
        case ToolErrorCode::kPrerequisiteViolation: return "prerequisite-violation";
        case ToolErrorCode::kTypeMismatch: return "type-mismatch";
        case ToolErrorCode::kNonNumericAttribute: return "non-numeric-attribute";
        case ToolErrorCode::kSyntax: return "syntax";
        case ToolErrorCode::kPrecondition: return "precondition";
        case ToolErrorCode::kEngine: return "engine";
        case ToolErrorCode::kRejected: return "rejected";
        case ToolErrorCode::kNoExample: return "no-example";
    }
    return "unknown";
}

ToolResult ToolResult::failure(ToolErrorCode code, std::string message) {
    ToolResult result;
    result.observation = render_error(ToolError{code, message});
    result.error = ToolError{code, std::move(message)};
    return result;
}

std::string render_error(const ToolError& error) {
    std::string out = "Error: " + error.message;
    if (!out.empty() && out.back() != '.' && out.back() != '!' && out.back() != '?') out += '.';
    out += ' ';
    out += kRetryInstruction;
    return out;
}

}  // namespace mw
