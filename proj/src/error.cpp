#include "gk0/error.hpp"

namespace gk0 {

std::string_view errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotInCone: return "NotInCone";
    case Errc::PreorderViolated: return "PreorderViolated";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::RelationNotZero: return "RelationNotZero";
    case Errc::NotPositive: return "NotPositive";
    case Errc::ProductNotInCone: return "ProductNotInCone";
    case Errc::DeltaNotNormal: return "DeltaNotNormal";
    case Errc::TargetLacksSdp: return "TargetLacksSdp";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::DeltaMismatch: return "DeltaMismatch";
    case Errc::NotPositiveMap: return "NotPositiveMap";
    case Errc::UnitNotPreserved: return "UnitNotPreserved";
    case Errc::NotOrderUnit: return "NotOrderUnit";
    case Errc::ClassMismatch: return "ClassMismatch";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::UnitMismatch: return "UnitMismatch";
    case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

} // namespace gk0
