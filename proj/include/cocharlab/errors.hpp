#pragma once

#include <stdexcept>
#include <string>

namespace cocharlab {

// A class-function decomposition produced a negative or non-integral
// multiplicity. On engine- or oracle-produced data this signals a bug
// (wrong rank, wrong trace), never a recoverable condition.
struct NotACharacter : std::runtime_error {
  explicit NotACharacter(const std::string& what) : std::runtime_error(what) {}
};

// The multidegree violates the hypothesis sum(l_j * (j-1), j>=2) <= m-2;
// the proper multidegree character vanishes there.
struct NotGoodMultidegree : std::invalid_argument {
  explicit NotGoodMultidegree(const std::string& what)
      : std::invalid_argument(what) {}
};

// Spanning-set enumeration was asked for a total degree above the
// configured cap.
struct CapExceeded : std::invalid_argument {
  explicit CapExceeded(const std::string& what)
      : std::invalid_argument(what) {}
};

// A published multiplicity table has no printed case covering the queried
// partition.
struct PatternNotCovered : std::invalid_argument {
  explicit PatternNotCovered(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace cocharlab
