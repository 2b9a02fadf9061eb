#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

/// Exact division by a ring element failed.
class NotDivisible : public std::domain_error {
public:
  explicit NotDivisible(const std::string &what) : std::domain_error(what) {}
};

/// An instance broke one of the engine's structural requirements
/// (a cofactor outside H, a transversal that does not index cosets, ...).
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string &what) : std::logic_error(what) {}
};

/// The virtual endomorphism was applied outside its domain.
class NotInH : public std::domain_error {
public:
  explicit NotInH(const std::string &what) : std::domain_error(what) {}
};

class InvalidConfig : public std::invalid_argument {
public:
  explicit InvalidConfig(const std::string &what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace selfsim
