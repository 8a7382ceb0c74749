#pragma once

#include <stdexcept>
#include <string>

namespace holant {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or axis count does not match the declared spaces.
struct DimensionError : Error {
  using Error::Error;
};

// Two vectors (or a map and a vector) live in different spaces.
struct SpaceMismatchError : Error {
  using Error::Error;
};

// A matrix required to be invertible is numerically singular.
struct SingularMatrixError : Error {
  using Error::Error;
};

// Model failed validation; message carries the joined violation list.
struct ValidationError : Error {
  using Error::Error;
};

// A contraction or enumeration would exceed the configured size cap.
struct CapExceededError : Error {
  using Error::Error;
};

struct NonpositiveNormalizerError : Error {
  NonpositiveNormalizerError(std::string edge_, double value_)
      : Error("nonpositive normalizer " + std::to_string(value_) + " on edge " + edge_),
        edge(std::move(edge_)),
        value(value_) {}
  std::string edge;
  double value;
};

struct ConeViolationError : Error {
  explicit ConeViolationError(std::string edge_)
      : Error("message left its cone on edge " + edge_), edge(std::move(edge_)) {}
  std::string edge;
};

struct ZeroEdgePairingError : Error {
  explicit ZeroEdgePairingError(std::string edge_)
      : Error("vanishing message pairing on edge " + edge_), edge(std::move(edge_)) {}
  std::string edge;
};

// A fixed-point message is too close to the boundary of its cone to build frames.
struct SingularMessageError : Error {
  explicit SingularMessageError(std::string edge_, const std::string& what_)
      : Error("singular message on edge " + edge_ + ": " + what_), edge(std::move(edge_)) {}
  std::string edge;
};

struct NonFixedPointError : Error {
  explicit NonFixedPointError(double residual_)
      : Error("messages are not a certified fixed point (residual " +
              std::to_string(residual_) + ")"),
        residual(residual_) {}
  double residual;
};

// Malformed input file; message carries the JSON field path.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace holant
