#include "boolcomb/error.hpp"

namespace boolcomb {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::MismatchedVertexCount: return "MismatchedVertexCount";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::OutOfRangeVertex: return "OutOfRangeVertex";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
        case Errc::InvalidPartition: return "InvalidPartition";
        case Errc::OutOfRangeVariable: return "OutOfRangeVariable";
        case Errc::NotMonotone: return "NotMonotone";
        case Errc::NotAPermutation: return "NotAPermutation";
        case Errc::UnsupportedTag: return "UnsupportedTag";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NoBigTwinClass: return "NoBigTwinClass";
        case Errc::NotIntersectionClosed: return "NotIntersectionClosed";
        case Errc::NotEquivalenceGraph: return "NotEquivalenceGraph";
        case Errc::UnsupportedExpression: return "UnsupportedExpression";
        case Errc::UnknownTheorem: return "UnknownTheorem";
        case Errc::SchemeRejectsGraph: return "SchemeRejectsGraph";
        case Errc::MalformedLabel: return "MalformedLabel";
        case Errc::MalformedInput: return "MalformedInput";
        case Errc::CertificationFailed: return "CertificationFailed";
    }
    return "Unknown";
}

}  // namespace boolcomb
