#pragma once

#include <stdexcept>
#include <string>

namespace sphroots {

// Bad input: malformed diagram strings, out-of-range characteristic,
// data violating a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation contradicted a structural fact that valid data must
// satisfy (lift mismatch, cone not a union of chambers, inadmissible
// dihedral angle, ...). `subject` names the offending object.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string subject, const std::string& what)
      : std::runtime_error(subject + ": " + what), subject_(std::move(subject)) {}
  const std::string& subject() const { return subject_; }

 private:
  std::string subject_;
};

}  // namespace sphroots
