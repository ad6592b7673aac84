#include "socstable/error.hpp"

namespace socstable {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::DuplicateAgent: return "DuplicateAgent";
    case Errc::UnknownAgentInPref: return "UnknownAgentInPref";
    case Errc::DuplicateInPref: return "DuplicateInPref";
    case Errc::SelfSideEdge: return "SelfSideEdge";
    case Errc::UnknownAgentInEdge: return "UnknownAgentInEdge";
    case Errc::InvalidName: return "InvalidName";
    case Errc::UnknownAgent: return "UnknownAgent";
    case Errc::AlreadyPromoted: return "AlreadyPromoted";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::GraphTooLarge: return "GraphTooLarge";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::NormalizationDiverged: return "NormalizationDiverged";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

} // namespace socstable
