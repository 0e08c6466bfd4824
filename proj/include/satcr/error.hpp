#pragma once

#include <stdexcept>
#include <string>

namespace satcr {

// Error codes shared across the library. Every throwing precondition names one
// of these so callers (and the CLI) can map failures to stable diagnostics.
enum class Errc {
    NonPrime,
    NotIrreducible,
    FieldMismatch,
    ShapeMismatch,
    Singular,
    DivideByZero,
    BadInput,
    UnknownType,
    RankOutOfRange,
    DimCap,
    CapExceeded,
    NotUnipotent,
    OrderTooLarge,
    CharTooSmall,
    NotInvariant,
    Inconclusive,
    NotInParabolic,
    NegativeMultiplicity,
    MissingModularData,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace satcr
