#pragma once

#include <stdexcept>
#include <string>

namespace origami {

enum class ErrorKind {
  Degenerate,      // geometrically degenerate input
  NoSuchFace,
  NoSuchEdge,
  AlreadyCut,
  EmptyMovingSet,
  Tear,            // a fold would separate faces joined by a crease
  Posed,           // operation not allowed on a posed origami
  Cycle,           // superposition relation became cyclic
  GlueMismatch,
  NotUnfoldable,
  Precondition,
  Script,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace origami
