#include "framedil/error.hpp"

namespace framedil {

const char *error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidMultiplier: return "InvalidMultiplier";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::NotAProjectiveRep: return "NotAProjectiveRep";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::NotABSRepresentation: return "NotABSRepresentation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace framedil
