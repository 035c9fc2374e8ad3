#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocharlab/character.hpp"
#include "cocharlab/engine.hpp"
#include "cocharlab/grading.hpp"

namespace cocharlab {

inline constexpr int kDefaultOracleCap = 7;

// UT_m with an elementary grading; knows the degree of every unit.
class GradedMatrixAlgebra {
 public:
  explicit GradedMatrixAlgebra(ElementaryGrading g) : grading_(std::move(g)) {}

  int order() const { return grading_.order(); }
  const ElementaryGrading& grading() const { return grading_; }
  std::vector<MatrixUnit> units_of_degree(int d, bool radical_only = false) const {
    return component_basis(grading_, d, radical_only);
  }

 private:
  ElementaryGrading grading_;
};

// One factor of a multilinear Y-proper product: a bare variable of nonzero
// degree, or a left-normed commutator of >= 2 slots ([a,b,c] = [[a,b],c]).
struct ProperFactor {
  bool bare = false;
  std::vector<int> slots;  // 0-based variable indices

  bool operator==(const ProperFactor&) const = default;
  bool operator<(const ProperFactor& o) const {
    if (bare != o.bare) return bare > o.bare;  // bare factors sort first
    return slots < o.slots;
  }
};

struct ProperProduct {
  std::vector<ProperFactor> factors;

  bool operator==(const ProperProduct&) const = default;
  bool operator<(const ProperProduct& o) const { return factors < o.factors; }

  // relabel every slot through perm (slot -> perm[slot])
  ProperProduct relabeled(const std::vector<int>& perm) const;
  // "z1*[y1,z2]" with y1.. the degree-0 slots and z1.. the others, in slot order
  std::string to_string(const std::vector<int>& slot_degrees) const;
};

// Degree class of each slot under multidegree l: l[0] slots of degree 0
// first, then l[1] of degree 1, and so on.
std::vector<int> slot_degrees(const Multidegree& l);

// Every product of bare nonzero-degree slots and left-normed commutators
// using each slot exactly once, degree-0 slots only inside commutators.
// Deliberately redundant (all slot orders); canonical enumeration order.
// Throws CapExceeded when the total degree exceeds cap.
std::vector<ProperProduct> spanning_products(const Multidegree& l,
                                             int cap = kDefaultOracleCap);

// Reduced spanning set: products of semistandard normal commutators only
// (degree-0 factors ordered i1 > i2 < i3 < ..., z-commutators z-first with
// increasing y indices), keeping only products whose factor degree sequence
// is good for the given grading. Same span; rank must match the full mode.
std::vector<ProperProduct> spanning_products_semistandard(
    const GradedMatrixAlgebra& algebra, const Multidegree& l,
    int cap = kDefaultOracleCap);

// Dense m x m integer matrix entries, row-major.
using DenseMatrix = std::vector<long long>;

// Exact evaluation of p at a degree-respecting assignment of matrix units.
// slot_degs gives each slot's degree; throws std::invalid_argument when the
// assignment violates a degree.
DenseMatrix evaluate_product(const GradedMatrixAlgebra& algebra,
                             const ProperProduct& p,
                             const std::vector<int>& slot_degs,
                             const std::vector<MatrixUnit>& assignment);

// The exact evaluation table of a spanning set against all degree-respecting
// matrix-unit assignments. Rows are reduced by fraction-free elimination
// with first-nonzero pivoting in canonical column order; the coordinates of
// every row with respect to the pivot-row basis are kept for the trace step.
class EvaluationTable {
 public:
  EvaluationTable(const GradedMatrixAlgebra& algebra, const Multidegree& l,
                  int cap = kDefaultOracleCap);

  const GradedMatrixAlgebra& algebra() const { return algebra_; }
  const Multidegree& multidegree() const { return l_; }
  const std::vector<ProperProduct>& products() const { return products_; }
  const std::vector<int>& degrees() const { return slot_degs_; }

  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  bool row_is_zero(int product_index) const;

  // trace of the slot permutation acting on the quotient, in the pivot-row
  // basis; perm must respect degree classes
  Rat trace(const std::vector<int>& perm) const;

 private:
  void build();

  const GradedMatrixAlgebra& algebra_;
  Multidegree l_;
  std::vector<int> slot_degs_;
  std::vector<ProperProduct> products_;
  std::map<ProperProduct, int> index_;
  std::vector<int> pivot_rows_;             // product indices of basis rows
  std::vector<std::vector<Rat>> coords_;    // per product, over pivot rows
};

Int gamma_oracle(const GradedMatrixAlgebra& algebra, const Multidegree& l,
                 int cap = kDefaultOracleCap);

// Character of the quotient module: traces of one representative per tuple
// of cycle types, decomposed against Murnaghan-Nakayama values tensored
// across the degree components. Throws NotACharacter on a rank/trace bug.
MultiCharacter xi_oracle(const GradedMatrixAlgebra& algebra,
                         const Multidegree& l, int cap = kDefaultOracleCap);

struct OracleResult {
  CharacterSum xi;
  Int gamma = 0;
  std::map<Multidegree, Int> breakdown;               // l -> gamma_l
  std::map<Multidegree, MultiCharacter> multidegrees;  // nonzero xi_l only
};

// Aggregation over all multidegrees of n: works for any elementary grading.
OracleResult xi_n_oracle(const GradedMatrixAlgebra& algebra, int n,
                         int cap = kDefaultOracleCap);

// True iff p evaluates to zero on every degree-respecting assignment of
// matrix units; the identity test used on T-ideal generators.
bool is_identity_on(const GradedMatrixAlgebra& algebra, const ProperProduct& p,
                    const std::vector<int>& slot_degs);

// f_eta as a ProperProduct plus its slot degrees: degree-0 entries become
// two-slot commutators, nonzero entries bare slots.
std::pair<ProperProduct, std::vector<int>> generator_product(
    const DegreeSequence& eta);

}  // namespace cocharlab
