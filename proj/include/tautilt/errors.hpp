#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

enum class ErrorKind {
    InvalidInput,
    NotAdmissible,
    MalformedRelation,
    InvalidInterval,
    RelationViolation,
    NotIndecomposable,
    IsProjective,
    LimitExceeded,
    IncompleteCatalogue,
    NotInTorsionClass,
    NotTauRigid,
    PreconditionFailed,
    InternalInconsistency,
    NotAMorphism,
    NotSplit,
    CheckFailed,
    HypothesisFailed,
    Undecided,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::IsProjective: return "IsProjective";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::IncompleteCatalogue: return "IncompleteCatalogue";
    case ErrorKind::NotInTorsionClass: return "NotInTorsionClass";
    case ErrorKind::NotTauRigid: return "NotTauRigid";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::Undecided: return "Undecided";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// frontends can map it to a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace tautilt
