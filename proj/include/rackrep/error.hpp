#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rackrep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid input (CLI exit code 2).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configured resource cap was hit (CLI exit code 3).
class ResourceLimit : public Error {
public:
  using Error::Error;
};

// ---- rack_core ------------------------------------------------------------

class OutOfRangeEntry : public InvalidInput {
public:
  OutOfRangeEntry(std::size_t row, std::size_t col, long long value)
      : InvalidInput("table entry [" + std::to_string(row) + "][" +
                     std::to_string(col) + "] = " + std::to_string(value) +
                     " is out of range"),
        row(row), col(col) {}
  std::size_t row, col;
};

class NonBijectiveRow : public InvalidInput {
public:
  explicit NonBijectiveRow(std::size_t x)
      : InvalidInput("left multiplication by " + std::to_string(x) +
                     " is not a bijection"),
        x(x) {}
  std::size_t x;
};

class DistributivityViolation : public InvalidInput {
public:
  DistributivityViolation(std::size_t x, std::size_t y, std::size_t z)
      : InvalidInput("self-distributivity fails at (x,y,z) = (" +
                     std::to_string(x) + "," + std::to_string(y) + "," +
                     std::to_string(z) + ")"),
        x(x), y(y), z(z) {}
  std::size_t x, y, z;
};

// ---- permgroup / enveloping -----------------------------------------------

class CapExceeded : public ResourceLimit {
public:
  explicit CapExceeded(std::size_t cap)
      : ResourceLimit("group closure exceeded cap of " + std::to_string(cap) +
                      " elements"),
        cap(cap) {}
  std::size_t cap;
};

class NotAHomomorphism : public Error {
public:
  NotAHomomorphism(std::size_t a, std::size_t b, const std::string &what = {})
      : Error("not a homomorphism at (" + std::to_string(a) + "," +
              std::to_string(b) + ")" + (what.empty() ? "" : ": " + what)),
        a(a), b(b) {}
  std::size_t a, b;
};

class NotConnected : public InvalidInput {
public:
  NotConnected() : InvalidInput("rack is not connected") {}
};

class CosetLimitExceeded : public ResourceLimit {
public:
  explicit CosetLimitExceeded(std::size_t limit)
      : ResourceLimit("coset enumeration exceeded " + std::to_string(limit) +
                      " cosets"),
        limit(limit) {}
  std::size_t limit;
};

class BudgetExceeded : public ResourceLimit {
public:
  using ResourceLimit::ResourceLimit;
};

// ---- reps -----------------------------------------------------------------

class NotInvertible : public InvalidInput {
public:
  explicit NotInvertible(std::size_t x)
      : InvalidInput("matrix for element " + std::to_string(x) +
                     " is not invertible"),
        x(x) {}
  std::size_t x;
};

class AxiomViolation : public Error {
public:
  AxiomViolation(std::size_t x, std::size_t y, double residual)
      : Error("rho(x|>y) != rho(x) rho(y) rho(x)^-1 at (" + std::to_string(x) +
              "," + std::to_string(y) + "), residual " +
              std::to_string(residual)),
        x(x), y(y), residual(residual) {}
  std::size_t x, y;
  double residual;
};

class ZeroScalar : public InvalidInput {
public:
  ZeroScalar() : InvalidInput("scalar representation needs a nonzero value") {}
};

class PowerObstruction : public Error {
public:
  explicit PowerObstruction(std::size_t x)
      : Error("rho(" + std::to_string(x) +
              ")^n is not the identity; the representation does not factor "
              "through the finite enveloping group"),
        x(x) {}
  std::size_t x;
};

class DimensionMismatch : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class ClassInconsistency : public Error {
public:
  explicit ClassInconsistency(std::size_t cls)
      : Error("trace is not constant on conjugacy class " +
              std::to_string(cls)),
        cls(cls) {}
  std::size_t cls;
};

class GapFailure : public Error {
public:
  explicit GapFailure(double smallest_gap)
      : Error("no separated eigenvalue cluster found; smallest gap " +
              std::to_string(smallest_gap)),
        smallest_gap(smallest_gap) {}
  double smallest_gap;
};

} // namespace rackrep
