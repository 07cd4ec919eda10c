#pragma once

#include <stdexcept>
#include <string>

namespace isoform {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix/vector shape does not match the operation's requirements.
class ShapeMismatchError : public Error {
public:
  using Error::Error;
};

/// Two subspaces (or a vector and a subspace) live in different ambient
/// coordinate spaces.
class AmbientMismatchError : public Error {
public:
  using Error::Error;
};

/// Unknown family label or rank outside the supported bounds.
class InvalidTypeError : public Error {
public:
  using Error::Error;
};

/// Requested enumeration would exceed the configured element cap.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& what, long long required, long long cap)
      : Error(what), required_order(required), configured_cap(cap) {}
  long long required_order;
  long long configured_cap;
};

/// A supplied root vector is not a root of the ambient system.
class RootNotInSystemError : public Error {
public:
  using Error::Error;
};

/// Equal-rank construction whose subsystem span plus central directions do
/// not fill the ambient Cartan subspace.
class RankDeficientError : public Error {
public:
  using Error::Error;
};

/// The supplied root set is not additively closed inside the ambient root
/// system, so it is not the root system of a subalgebra.
class NotClosedSubsystemError : public Error {
public:
  using Error::Error;
};

/// The supplied node permutation does not preserve the Cartan matrix.
class NotDiagramAutomorphismError : public Error {
public:
  using Error::Error;
};

/// Diagram automorphism outside the supported catalogue of folds.
class UnsupportedFoldError : public Error {
public:
  using Error::Error;
};

/// Circle construction with a zero direction vector.
class ZeroDirectionError : public Error {
public:
  using Error::Error;
};

/// Pair recipe outside the supported constructions.
class UnsupportedPairError : public Error {
public:
  using Error::Error;
};

/// Multiset difference requested where containment fails.
class MultisetNotContainedError : public Error {
public:
  using Error::Error;
};

/// The degree-pairing product evaluated to a non-integer.
class NonIntegerProductError : public Error {
public:
  using Error::Error;
};

/// Degree multiset sizes inconsistent with the requested pairing.
class SizeMismatchError : public Error {
public:
  using Error::Error;
};

/// Equal-rank transfer requested between pairs with different Cartan
/// subspaces or different ambient groups.
class SubspaceMismatchError : public Error {
public:
  using Error::Error;
};

/// Two independently computed routes disagree; indicates a bug, never a
/// property of the input.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

/// Pair-spec document failed to parse or violates the schema.
class SpecParseError : public Error {
public:
  using Error::Error;
};

}  // namespace isoform
