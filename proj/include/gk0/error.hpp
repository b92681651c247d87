#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gk0 {

enum class Errc {
    NotAssociative,
    NoIdentity,
    NoInverse,
    GroupMismatch,
    ShapeMismatch,
    NotInCone,
    PreorderViolated,
    SumMismatch,
    IndexOutOfRange,
    NotEquivariant,
    RelationNotZero,
    NotPositive,
    ProductNotInCone,
    DeltaNotNormal,
    TargetLacksSdp,
    InternalVerificationFailed,
    DeltaMismatch,
    NotPositiveMap,
    UnitNotPreserved,
    NotOrderUnit,
    ClassMismatch,
    NotRealizable,
    UnitMismatch,
    SchemaError,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

} // namespace gk0
