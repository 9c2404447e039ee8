#ifndef FRAMEDIL_ERROR_HPP
#define FRAMEDIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace framedil {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  DomainError,
  NotPSD,
  NotAFrame,
  ShapeMismatch,
  DimMismatch,
  InvalidGroup,
  InvalidMultiplier,
  NotARepresentation,
  NotAProjectiveRep,
  InvalidLattice,
  EvenOrder,
  NotABSRepresentation,
  ParseError,
  Internal,
};

const char *error_kind_name(ErrorKind k);

/// All operations report failure by throwing Error; kind() is stable and is
/// what the C API and the CLI exit codes key on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace framedil

#endif
