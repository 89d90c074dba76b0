#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace demux {

/// Violated precondition, postcondition or invariant of a library contract.
class contract_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spectrum grid does not cover the support of the pulse sampled onto it.
class coverage_error : public contract_error {
 public:
  using contract_error::contract_error;
};

/// A spectrum grid is too coarse to resolve the sampled spectral phase.
class resolution_error : public contract_error {
 public:
  resolution_error(const std::string& what, std::size_t required_points)
      : contract_error(what), required_points_(required_points) {}

  /// Minimum number of grid points that would satisfy the resolution rule.
  std::size_t required_points() const { return required_points_; }

 private:
  std::size_t required_points_;
};

/// An iterative solver exhausted its iteration budget before meeting its
/// convergence criteria.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace demux
