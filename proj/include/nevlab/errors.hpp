// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace nevlab {

/// Precondition or invariant violation (bad radii, bad masses, bad scenario values).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed; message carries location info when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An atom of the integrand sits (numerically) on the quadrature circle.
class AtomOnCircleError : public std::runtime_error {
 public:
  AtomOnCircleError(double radius, double atom_abs)
      : std::runtime_error("atom at |a| = " + std::to_string(atom_abs) +
                           " lies on the quadrature circle r = " + std::to_string(radius)),
        radius(radius),
        atom_abs(atom_abs) {}
  double radius;
  double atom_abs;
};

/// Planar set has (numerically) zero or negative measure.
class DegenerateSetError : public std::runtime_error {
 public:
  explicit DegenerateSetError(const std::string& what) : std::runtime_error(what) {}
};

/// A check that only makes sense for entire functions was asked for a function with poles.
class EntireRequiredError : public std::runtime_error {
 public:
  explicit EntireRequiredError(const std::string& what) : std::runtime_error(what) {}
};

/// Monte-Carlo proposal distribution almost never hits the target set.
class ProposalMismatchError : public std::runtime_error {
 public:
  explicit ProposalMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nevlab
