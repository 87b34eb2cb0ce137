#pragma once

#include <stdexcept>
#include <string>

namespace drg {

/// Malformed arguments: degree mismatch, out-of-range point, bad file data.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// An operation's documented precondition does not hold (e.g. intransitive input).
class PreconditionError : public std::logic_error {
public:
  explicit PreconditionError(const std::string &what) : std::logic_error(what) {}
};

/// A configured budget (elements, degree, nodes, bits) would be exceeded.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string &what) : std::runtime_error(what) {}
};

/// Shipped data disagrees with its recorded metadata.
class IntegrityError : public std::runtime_error {
public:
  explicit IntegrityError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace drg
