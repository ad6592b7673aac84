#pragma once

#include <stdexcept>
#include <string>

namespace socstable {

// Every exception thrown by this library carries one of these codes. Messages
// name the offending token or bound.
enum class Errc {
    DuplicateAgent,
    UnknownAgentInPref,
    DuplicateInPref,
    SelfSideEdge,
    UnknownAgentInEdge,
    InvalidName,
    UnknownAgent,
    AlreadyPromoted,
    InstanceTooLarge,
    GraphTooLarge,
    NotIndependent,
    NormalizationDiverged,
    InvalidGraph,
    ParseError,
    UnknownFixture,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace socstable
