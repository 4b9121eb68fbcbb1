#pragma once

#include <stdexcept>
#include <string>

namespace humplab {

// An argument lies outside an operation's domain (negative size, k outside
// 2..5, n below a formula's first valid index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration was asked to go past its configured size cap.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exactness assertion fired: a division that must be exact was not, or a
// quantity that must be even was odd. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace humplab
