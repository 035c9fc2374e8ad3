#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cocharlab/numbers.hpp"

namespace cocharlab {

// Weakly decreasing sequence of positive integers. The empty sequence is the
// unique partition of 0. Partitions are stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts is weakly decreasing and > 0.
  explicit Partition(std::vector<int> parts);

  // Single-row shape (n); the empty partition for n = 0.
  static Partition row(int n);
  // Single-column shape (1^n).
  static Partition column(int n);

  // Canonicalizes a shape that may carry trailing zeros, as published tables
  // produce them. Degenerate shapes (a zero or negative part before the end,
  // or a non-decreasing step) map to nullopt: they stand for the zero
  // character and are dropped by the caller.
  static std::optional<Partition> normalized(const std::vector<long>& shape);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // 1-based; 0 beyond the last row.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Canonical order: by weight, then reverse-lexicographic, i.e. the order
  // partitions_of() emits: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
  bool operator<(const Partition& other) const;
  bool operator==(const Partition& other) const = default;

  std::string to_string() const;  // "(3,1)", "()" for empty

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Cycle lengths of a conjugacy class of the symmetric group.
using CycleType = Partition;

// Sequence of nonnegative integers with fixed length.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

  int total() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return parts[i]; }

  bool operator<(const Composition& other) const { return parts < other.parts; }
  bool operator==(const Composition& other) const = default;

  std::string to_string() const;  // "(2,1,0)"
};

// All partitions of n (at most max_parts parts when given), in canonical
// reverse-lexicographic order. Deterministic across runs.
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = {});

// Column lengths of the Young diagram of p.
Partition conjugate(const Partition& p);

// Number of standard Young tableaux of shape p, by the hook-length formula.
Int hook_dimension(const Partition& p);

// Compositions of `total` into `parts` nonnegative parts whose first part is
// never exactly 1 (no length-1 commutator in the y's exists), in
// lexicographic order.
std::vector<Composition> s_compositions(int total, int parts);

}  // namespace cocharlab
