#pragma once

#include <stdexcept>

namespace nw {

/// Input outside the domain of an operation (n = 0, bound exceeded, bad name).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dirichlet inverse requested for a function with f(1) = 0.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or product was requested outside its convergence region.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nw
