#ifndef HAMGRID_ERRORS_HPP
#define HAMGRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamgrid {

/// Input outside the mathematical domain of an operation (bad sizes,
/// empty ensembles, poles at the origin, ...). The CLI maps it to exit 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource guard refused the request. CLI exit 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (e.g. a fitted recurrence did not
/// survive verification at the full theoretical bound).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hamgrid

#endif  // HAMGRID_ERRORS_HPP
