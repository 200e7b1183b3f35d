#pragma once

#include <stdexcept>
#include <string>

namespace gk2 {

/// Caller supplied parameters outside an operation's domain.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed; signals an arithmetic bug.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A function value at a point is an unresolved 0/0 quotient.
class needs_local_resolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_argument(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw consistency_error(what);
}

}  // namespace detail
}  // namespace gk2
