#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolcomb {

enum class Errc {
    MismatchedVertexCount,
    EmptyInput,
    ArityMismatch,
    OutOfRangeVertex,
    DuplicateVertex,
    SizeLimitExceeded,
    InvalidPartition,
    OutOfRangeVariable,
    NotMonotone,
    NotAPermutation,
    UnsupportedTag,
    BudgetExceeded,
    NoBigTwinClass,
    NotIntersectionClosed,
    NotEquivalenceGraph,
    UnsupportedExpression,
    UnknownTheorem,
    SchemeRejectsGraph,
    MalformedLabel,
    MalformedInput,
    CertificationFailed,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Parse failures carry the byte offset of the first offending character.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(Errc::MalformedInput, what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace boolcomb
