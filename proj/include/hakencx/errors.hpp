#pragma once

#include <stdexcept>
#include <string>

namespace hakencx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input structure: dangling boundary ids, bad dimensions,
/// facets contained in other facets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an argument outside its documented domain,
/// e.g. dualizing a non-simple complex.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A manifold summary lacks the data an evaluation needs.
class IncompleteSummary : public Error {
 public:
  using Error::Error;
};

/// Cutting along a disconnected hypersurface.
class UnsupportedCut : public Error {
 public:
  using Error::Error;
};

/// The simplicial 3-sphere surrogate check failed.
class NotA3Sphere : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog entry or bad entry parameters.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hakencx
