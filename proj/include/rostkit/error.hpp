#pragma once

#include <stdexcept>
#include <string>

namespace rostkit {

/// Input outside an operation's domain (bad group label, truncation past the
/// known order, non-unit leading term, ...). The CLI maps it to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed identity that must hold by construction failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rostkit
