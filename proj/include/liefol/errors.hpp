#pragma once

#include <stdexcept>
#include <string>

namespace liefol {

/// Malformed caller input: dimension mismatch, bad indices, singular change of basis.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bilinear form that had to be non-degenerate (on some subspace) was not.
class DegenerateMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by code paths that only support Riemannian (positive-definite) frames.
class UnsupportedSignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInvolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liefol
