#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpvi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class PoleAtPoint : public Error {
 public:
  using Error::Error;
};

class ExpressionTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadParameterRelation : public Error {
 public:
  using Error::Error;
};

/// Raised when a pulled-back Hamiltonian keeps a pole along the chart's
/// exceptional coordinate; carries the monomials that are not divisible.
class NonPolynomial : public Error {
 public:
  NonPolynomial(const std::string& what, std::vector<std::string> offending)
      : Error(what), offending_(std::move(offending)) {}
  const std::vector<std::string>& offending() const { return offending_; }

 private:
  std::vector<std::string> offending_;
};

class StepLimitExceeded : public Error {
 public:
  StepLimitExceeded(const std::string& what, double last_t)
      : Error(what), last_t_(last_t) {}
  double last_good_t() const { return last_t_; }

 private:
  double last_t_;
};

class BlowUp : public Error {
 public:
  BlowUp(const std::string& what, double t) : Error(what), t_(t) {}
  double t() const { return t_; }

 private:
  double t_;
};

class AnsatzTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace cpvi
