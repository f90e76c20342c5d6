#pragma once

#include <stdexcept>
#include <string>

namespace qmoon {

// Raised when inputs violate an operation's precondition (bad series,
// malformed data files, inconsistent tables).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixing series of different nome conventions or prefactors.
class ConventionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmoon
