#pragma once

#include <stdexcept>
#include <string>

namespace ratk {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input failed a precondition or schema check.
struct ValidationError : Error {
  using Error::Error;
};

/// A numerical iteration exhausted its budget.
struct NonConvergence : Error {
  long iterations;
  explicit NonConvergence(long iters, const std::string& what)
      : Error(what), iterations(iters) {}
};

/// Numerator and denominator vanish simultaneously beyond tolerance.
struct Indeterminate : Error {
  using Error::Error;
};

/// Numerator and denominator share a root within tolerance.
struct CoprimalityViolation : Error {
  using Error::Error;
};

/// A desk-scale size cap was exceeded.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// The supplied point list is not a cycle of the map.
struct NotACycle : Error {
  using Error::Error;
};

/// A Herman descriptor lacks an entry for a Julia critical label.
struct MissingHValue : Error {
  std::string label;
  explicit MissingHValue(const std::string& lbl)
      : Error("missing H value for critical label '" + lbl + "'"), label(lbl) {}
};

/// A computed Fatou census left orbits undetermined.
struct IncompleteSpec : Error {
  using Error::Error;
};

}  // namespace ratk
