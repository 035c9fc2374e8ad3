#pragma once

#include <string>
#include <vector>

#include "cocharlab/partition.hpp"

namespace cocharlab {

// Position of a matrix unit e_{ij}, 1-based, upper triangular (row <= col).
struct MatrixUnit {
  int row = 0;
  int col = 0;
  bool operator==(const MatrixUnit&) const = default;
  bool operator<(const MatrixUnit& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
  std::string to_string() const;  // "e13"
};

// Elementary Z_m-grading on UT_m given by an m-tuple of residues; the degree
// of e_{ij} is (g_j - g_i) mod m. The paper's displayed g_i g_j^{-1}
// orientation contradicts its own good-sequence results, so this orientation
// is the one used throughout; the discrepancy is surfaced by the reports.
class ElementaryGrading {
 public:
  explicit ElementaryGrading(std::vector<int> tuple);

  static ElementaryGrading phi(int m);  // (0,0,1,...,m-2)
  static ElementaryGrading psi(int m);  // (0,1,...,m-1)

  int order() const { return static_cast<int>(tuple_.size()); }
  int entry(int i) const;  // 1-based
  const std::vector<int>& tuple() const { return tuple_; }

  bool operator==(const ElementaryGrading&) const = default;
  std::string to_string() const;  // "(0,0,1)"

 private:
  std::vector<int> tuple_;
};

struct DegreeSequence {
  std::vector<int> entries;

  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> e) : entries(std::move(e)) {}

  int length() const { return static_cast<int>(entries.size()); }
  bool operator==(const DegreeSequence&) const = default;
  bool operator<(const DegreeSequence& o) const {
    if (entries.size() != o.entries.size())
      return entries.size() < o.entries.size();
    return entries < o.entries;
  }
  std::string to_string() const;  // "(1,0)"
};

// Homogeneous degree of e_{ij}; requires 1 <= i <= j <= m.
int unit_degree(const ElementaryGrading& g, int i, int j);

// All upper-triangular positions of degree d in row-major order; with
// radical_only, only the strictly upper-triangular (i < j) ones.
std::vector<MatrixUnit> component_basis(const ElementaryGrading& g, int d,
                                        bool radical_only = false);

struct GoodSequenceWitness {
  bool good = false;
  // when good: radical units r_1..r_l with matching degrees and
  // r_t.col == r_{t+1}.row, so the product is a nonzero matrix unit
  std::vector<MatrixUnit> chain;
};

// Def-3.3 decision: eta is good iff radical matrix units with these degrees
// chain into a nonzero product. Depth-first over start rows; the first
// witness found in row-major order is returned.
GoodSequenceWitness is_good_sequence(const ElementaryGrading& g,
                                     const DegreeSequence& eta);

// The closed-form criterion for the phi-grading: good iff mu_1 = 0 and
// sum_{j>=2} mu_j (j-1) <= m-2. Agrees with is_good_sequence on zero-free
// sequences; sequences with leading zeros are outside its domain.
bool phi_good_criterion(int m, const DegreeSequence& alpha);

// Minimal bad sequences of length <= max_len: bad sequences containing no
// shorter bad sequence as a contiguous factor. Ordered by length, then
// lexicographically.
std::vector<DegreeSequence> bad_sequences(const ElementaryGrading& g,
                                          int max_len);

struct TIdealGenerator {
  DegreeSequence eta;
  std::string text;  // "z1*[y1,y2]"
};

// One generator f_eta per minimal bad sequence of length <= m. Degree-0
// slots become commutators of two fresh degree-0 variables, nonzero slots
// single fresh variables.
std::vector<TIdealGenerator> t_ideal_generators(const ElementaryGrading& g);

// Canonical textual form of f_eta alone.
std::string render_generator(const DegreeSequence& eta);

}  // namespace cocharlab
