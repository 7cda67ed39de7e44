#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eprgame {

// Base of every domain error. `details()` carries the individual failed
// checks (equalities, indices, fields) when there is more than one.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), details_(std::move(details)) {}

  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  std::vector<std::string> details_;
};

#define EPRGAME_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

EPRGAME_DEFINE_ERROR(NotSymmetric);
EPRGAME_DEFINE_ERROR(NotABehavior);
EPRGAME_DEFINE_ERROR(ZeroConstraintViolated);
EPRGAME_DEFINE_ERROR(ConstraintViolation);
EPRGAME_DEFINE_ERROR(InfeasibleCompletion);
EPRGAME_DEFINE_ERROR(InvalidState);
EPRGAME_DEFINE_ERROR(InvalidSetup);
EPRGAME_DEFINE_ERROR(SamplingExhausted);
EPRGAME_DEFINE_ERROR(NumericalError);
// Malformed input files: the message names the offending field.
EPRGAME_DEFINE_ERROR(InputError);

#undef EPRGAME_DEFINE_ERROR

// Joins details into a single "a; b; c" line for diagnostics.
inline std::string join_details(const std::vector<std::string>& details) {
  std::string out;
  for (const auto& d : details) {
    if (!out.empty()) out += "; ";
    out += d;
  }
  return out;
}

}  // namespace eprgame
