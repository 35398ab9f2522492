#pragma once

#include <stdexcept>

namespace polyzero {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPolynomial : public Error {
 public:
  using Error::Error;
};

class DerivativeOfConstant : public Error {
 public:
  using Error::Error;
};

class ZeroScale : public Error {
 public:
  using Error::Error;
};

/// F(0) = 0: the zero-count ratio log(M/|F(0)|) is undefined.
class ZeroAtCenter : public Error {
 public:
  using Error::Error;
};

class BadDelta : public Error {
 public:
  using Error::Error;
};

/// M < |F(0)| contradicts the maximum modulus principle; the caller fed
/// an M that is not actually a bound on |F| over the disk.
class BoundBelowCenterValue : public Error {
 public:
  using Error::Error;
};

class HypothesisNotSatisfied : public Error {
 public:
  using Error::Error;
};

class NoHypothesisApplies : public Error {
 public:
  using Error::Error;
};

class NotConverged : public Error {
 public:
  using Error::Error;
};

class ContourNearZero : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

/// The two independent zero-count oracles both converged and disagree.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace polyzero
