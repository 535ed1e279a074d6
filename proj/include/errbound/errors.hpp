#pragma once

#include <stdexcept>
#include <string>

namespace errbound {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A distribution entry is negative.
class NegativeEntry : public Error {
 public:
  using Error::Error;
};

// Total mass deviates from 1 by more than the ingestion tolerance.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Fewer than 2 classes or observations.
class TooSmall : public Error {
 public:
  using Error::Error;
};

// Two distributions do not share dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Probability vectors of different length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Convex generator with f(1) != 0.
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside its admissible interval.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Refined bound requested without its constraint t.
class MissingConstraint : public Error {
 public:
  using Error::Error;
};

// Witness or simulation parameters outside the family ranges.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Query at an observation whose conditional column is undefined.
class UndefinedColumn : public Error {
 public:
  using Error::Error;
};

// A simulation accepted zero samples.
class EmptyResult : public Error {
 public:
  using Error::Error;
};

// Frontier grid point outside (0, 1-2t).
class GridOutOfRange : public Error {
 public:
  using Error::Error;
};

// File could not be read, written, or parsed; message carries the line number.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace errbound
