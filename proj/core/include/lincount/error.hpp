#pragma once

#include <stdexcept>
#include <string>

namespace lincount {

/// Validation failures on user-supplied problems. These mean the question is
/// malformed or out of range; they are distinct from std::logic_error, which
/// signals a broken internal identity and should never be seen.
enum class ErrorCode {
    NotBalanced,          // r does not divide dr+d+r-rg: no generically finite count
    RegimeViolation,      // formula applied outside its proven range
    InvalidK,             // CPS coincidence count k out of 1..min(d,n)
    CodimTooLarge,        // pullback degree asked for |lambda| > d-r
    DegreeMismatch,       // pairing degrees do not add up to the box dimension
    BoxMismatch,          // product of classes in different Grassmannians
    PartitionOutsideBox,  // partition does not fit the box
    GridTooSmall,         // more red cells than the filling grid can hold
    CapExceeded,          // request beyond the configured desk-scale caps
    ParseError,           // malformed partition / expression / range text
    InvalidArgument,      // other precondition violations (g < 0, d < 1, ...)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    const char* code_name() const {
        switch (code_) {
            case ErrorCode::NotBalanced: return "NotBalanced";
            case ErrorCode::RegimeViolation: return "RegimeViolation";
            case ErrorCode::InvalidK: return "InvalidK";
            case ErrorCode::CodimTooLarge: return "CodimTooLarge";
            case ErrorCode::DegreeMismatch: return "DegreeMismatch";
            case ErrorCode::BoxMismatch: return "BoxMismatch";
            case ErrorCode::PartitionOutsideBox: return "PartitionOutsideBox";
            case ErrorCode::GridTooSmall: return "GridTooSmall";
            case ErrorCode::CapExceeded: return "CapExceeded";
            case ErrorCode::ParseError: return "ParseError";
            case ErrorCode::InvalidArgument: return "InvalidArgument";
        }
        return "Error";
    }

private:
    ErrorCode code_;
};

}  // namespace lincount
