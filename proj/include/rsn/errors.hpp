#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rsn {

// Error taxonomy. Each class corresponds to one CLI exit code, so library
// code must pick the class by what went wrong, not by where it was thrown:
//
//   InputError          malformed documents, unknown elements, bad maps (exit 2)
//   RelationClassError  relation lacks a required property, e.g. not a
//                       quasiorder where one is needed (exit 3)
//   CapacityError       instance exceeds a configured brute-force bound (exit 4)
//   LatticeError        order data is not a lattice, or the structure is
//                       unsupported (non-distributive) (exit 5)
//   PreconditionError   a theorem precondition failed on otherwise valid
//                       input, e.g. representing a non-Nelson algebra (exit 6)
//   InternalError       invariant that should hold by theorem was violated;
//                       always a bug, never expected in normal use (exit 1)

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
  using Error::Error;
};

class RelationClassError : public Error {
public:
  using Error::Error;
};

class CapacityError : public Error {
public:
  using Error::Error;
};

class LatticeError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  PreconditionError(std::string law, const std::string& msg)
      : Error(msg), law_(std::move(law)) {}

  // Name of the axiom/property that failed, e.g. "kleene" or "n5".
  const std::string& law() const noexcept { return law_; }

private:
  std::string law_;
};

class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace rsn
