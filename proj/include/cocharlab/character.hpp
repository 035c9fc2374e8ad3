#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocharlab/errors.hpp"
#include "cocharlab/partition.hpp"

namespace cocharlab {

// Formal nonnegative-integer combination of irreducible symmetric-group
// characters of a fixed degree. Zero multiplicities are never stored.
class CharacterSum {
 public:
  explicit CharacterSum(int degree = 0) : degree_(degree) {}

  static CharacterSum irreducible(const Partition& p);
  // The unit character: degree 0, the empty partition with multiplicity 1.
  static CharacterSum unit();

  int degree() const { return degree_; }
  const std::map<Partition, Int>& terms() const { return terms_; }
  Int multiplicity(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  // Throws std::invalid_argument on weight/degree mismatch or negative
  // resulting multiplicity.
  void add(const Partition& p, const Int& mult);

  // sum over terms of multiplicity * hook_dimension
  Int total_dimension() const;

  CharacterSum& operator+=(const CharacterSum& other);
  bool operator==(const CharacterSum& other) const = default;

  std::string to_string() const;  // "2[(2,1)]+[(1,1,1)]", "0" when empty

 private:
  int degree_;
  std::map<Partition, Int> terms_;
};

// Character of a product of symmetric groups: keys are tuples of partitions,
// the i-th of weight multidegree[i].
class MultiCharacter {
 public:
  explicit MultiCharacter(Composition multidegree)
      : multidegree_(std::move(multidegree)) {}

  const Composition& multidegree() const { return multidegree_; }
  const std::map<std::vector<Partition>, Int>& terms() const { return terms_; }

  void add(const std::vector<Partition>& key, const Int& mult);
  Int total_dimension() const;
  bool operator==(const MultiCharacter& other) const = default;

  std::string to_string() const;

 private:
  Composition multidegree_;
  std::map<std::vector<Partition>, Int> terms_;
};

// ---- Littlewood-Richardson machinery ----

// c^lambda_{mu nu} by direct enumeration of LR skew tableaux of shape
// lambda/mu and content nu (lattice-word condition). No precomputed tables.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// [mu]*[nu] expanded by the general rule, bypassing the Pieri fast path.
// Exposed so tests can pin fast path == general rule.
std::map<Partition, Int> lr_expand_general(const Partition& mu,
                                           const Partition& nu);

// Pieri rules: mu * (k) adds horizontal strips, mu * (1^k) vertical strips.
std::map<Partition, Int> pieri_row(const Partition& mu, int k);
std::map<Partition, Int> pieri_column(const Partition& mu, int k);

// Bilinear extension of the LR rule; takes the Pieri fast path whenever one
// factor is a single row or column.
CharacterSum lr_product(const CharacterSum& a, const CharacterSum& b);

// Left fold of lr_product over a nonempty sequence.
CharacterSum induce_product_chain(const std::vector<CharacterSum>& factors);

// The regular permutation character (1 x ... x 1)^{S_k}: multiplicity of
// each lambda |- k is its hook dimension. Computed as an induced chain.
CharacterSum regular_character(int k);

// ---- character values and decomposition ----

// chi_lambda(mu) via the Murnaghan-Nakayama border-strip recursion.
// Weight mismatch is a contract violation (std::invalid_argument).
Int mn_character_value(const Partition& lambda, const CycleType& mu);

// z_mu = prod i^{a_i} a_i!; |class mu| = n!/z_mu.
Int cycle_type_centralizer(const CycleType& mu);
Int conjugacy_class_size(const CycleType& mu);

// Multiplicity map lambda -> <f, chi_lambda> for a class function given by
// its values on every cycle type of n. Exact rationals internally; throws
// NotACharacter if any inner product is negative or non-integral.
CharacterSum decompose_class_function(int n,
                                      const std::map<CycleType, Rat>& values);

}  // namespace cocharlab
