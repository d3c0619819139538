#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Error taxonomy shared by the loader and the order-theoretic operations.
struct HopfError : std::runtime_error {
  explicit HopfError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAPartialOrder : HopfError {
  explicit NotAPartialOrder(const std::string& what) : HopfError(what) {}
};
struct NoUniqueBottom : HopfError {
  explicit NoUniqueBottom(const std::string& what) : HopfError(what) {}
};
struct NoUniqueTop : HopfError {
  explicit NoUniqueTop(const std::string& what) : HopfError(what) {}
};
struct NotComparable : HopfError {
  explicit NotComparable(const std::string& what) : HopfError(what) {}
};
struct NotALattice : HopfError {
  explicit NotALattice(const std::string& what) : HopfError(what) {}
};
struct ChainNotInInterval : HopfError {
  explicit ChainNotInInterval(const std::string& what) : HopfError(what) {}
};
struct NotAForest : HopfError {
  explicit NotAForest(const std::string& what) : HopfError(what) {}
};
struct InputDecomposable : HopfError {
  explicit InputDecomposable(const std::string& what) : HopfError(what) {}
};
struct SizeLimit : HopfError {
  explicit SizeLimit(const std::string& what) : HopfError(what) {}
};
struct InvalidInput : HopfError {
  explicit InvalidInput(const std::string& what) : HopfError(what) {}
};
// An internal invariant (e.g. a theorem the code relies on) failed to hold.
struct InternalInvariant : HopfError {
  explicit InternalInvariant(const std::string& what) : HopfError(what) {}
};

}  // namespace hopf
