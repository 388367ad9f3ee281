#pragma once

#include <stdexcept>
#include <string>

namespace exgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceMismatchError : Error {
  SpaceMismatchError() : Error("operands live on different inner-product spaces") {}
};

struct DegreeError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Hodge star / form_inner on a metric whose volume scale is irrational.
struct UnsupportedMetricError : Error {
  using Error::Error;
};

struct InvalidInputError : Error {
  using Error::Error;
};

struct DegeneratePlaneError : Error {
  DegeneratePlaneError() : Error("vectors do not span a two-plane") {}
};

}  // namespace exgeo
