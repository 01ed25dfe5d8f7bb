#pragma once

#include <stdexcept>
#include <string>

namespace movoid {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    TooLarge,
    DivisionByZero,
    NonSquare,
    ZeroElement,
    BadModulus,
    ModelMismatch,
    NotCollinear,
    DegeneratePair,
    OffQuadric,
    UnknownName,
    ParamsRequired,
    NoValidA,
    WrongResidue,
    BadInput,
};

/// Library-wide exception: a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonSquare: return "NonSquare";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::BadModulus: return "BadModulus";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::OffQuadric: return "OffQuadric";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParamsRequired: return "ParamsRequired";
    case Errc::NoValidA: return "NoValidA";
    case Errc::WrongResidue: return "WrongResidue";
    case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace movoid
