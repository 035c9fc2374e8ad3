#include "cocharlab/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "cocharlab/errors.hpp"

namespace cocharlab {

ProperProduct ProperProduct::relabeled(const std::vector<int>& perm) const {
  ProperProduct out = *this;
  for (ProperFactor& f : out.factors)
    for (int& s : f.slots) s = perm[s];
  return out;
}

std::string ProperProduct::to_string(const std::vector<int>& degs) const {
  // slot names: y1.. for degree 0, z/t/r (x<d> beyond) for nonzero degrees,
  // numbered within each degree class in slot order
  std::vector<std::string> names(degs.size());
  std::map<int, int> counters;
  for (size_t s = 0; s < degs.size(); ++s) {
    int d = degs[s];
    int k = ++counters[d];
    static const char* letters[] = {"y", "z", "t", "r"};
    names[s] = d <= 3 ? letters[d] + std::to_string(k)
                      : "x" + std::to_string(d) + "_" + std::to_string(k);
  }
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    const ProperFactor& f = factors[i];
    if (f.bare) {
      os << names[f.slots[0]];
    } else {
      os << '[';
      for (size_t j = 0; j < f.slots.size(); ++j) {
        if (j) os << ',';
        os << names[f.slots[j]];
      }
      os << ']';
    }
  }
  if (factors.empty()) os << "1";
  return os.str();
}

std::vector<int> slot_degrees(const Multidegree& l) {
  std::vector<int> degs;
  for (int j = 0; j < l.length(); ++j)
    for (int i = 0; i < l[j]; ++i) degs.push_back(j);
  return degs;
}

std::vector<ProperProduct> spanning_products(const Multidegree& l, int cap) {
  int n = l.total();
  if (n > cap)
    throw CapExceeded("total degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<int> degs = slot_degrees(l);
  std::vector<ProperProduct> out;
  std::vector<ProperFactor> cur;
  std::vector<bool> used(n, false);
  int remaining = n;

  // ordered tuples of t distinct unused slots, appended as one commutator
  auto commutators = [&](auto&& self_products, int t) -> void {
    std::vector<int> tuple;
    auto pick = [&](auto&& self) -> void {
      if (static_cast<int>(tuple.size()) == t) {
        cur.push_back({false, tuple});
        remaining -= t;
        self_products(self_products);
        remaining += t;
        cur.pop_back();
        return;
      }
      for (int s = 0; s < n; ++s) {
        if (used[s]) continue;
        used[s] = true;
        tuple.push_back(s);
        self(self);
        tuple.pop_back();
        used[s] = false;
      }
    };
    pick(pick);
  };

  auto rec = [&](auto&& self) -> void {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    for (int s = 0; s < n; ++s) {
      if (used[s] || degs[s] == 0) continue;
      used[s] = true;
      cur.push_back({true, {s}});
      --remaining;
      self(self);
      ++remaining;
      cur.pop_back();
      used[s] = false;
    }
    for (int t = 2; t <= remaining; ++t) commutators(self, t);
  };
  rec(rec);
  return out;
}

std::vector<ProperProduct> spanning_products_semistandard(
    const GradedMatrixAlgebra& algebra, const Multidegree& l, int cap) {
  int n = l.total();
  if (n > cap)
    throw CapExceeded("total degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<int> degs = slot_degrees(l);
  std::vector<int> yslots, zslots;
  for (int s = 0; s < n; ++s) (degs[s] == 0 ? yslots : zslots).push_back(s);
  int ny = static_cast<int>(yslots.size());
  int nz = static_cast<int>(zslots.size());

  std::vector<ProperProduct> out;

  // container of each y: one of the nz z-tails, or nz = the block pool
  std::vector<int> container(ny, 0);
  auto emit_for_assignment = [&]() {
    std::vector<std::vector<int>> tails(nz);
    std::vector<int> pool;
    for (int i = 0; i < ny; ++i) {
      if (container[i] == nz) pool.push_back(yslots[i]);
      else tails[container[i]].push_back(yslots[i]);
    }
    // partition the pool into blocks of size >= 2; smallest element leads
    // each block to avoid duplicates
    std::vector<std::vector<int>> blocks;
    auto with_blocks = [&]() -> void {
      // all orderings: z factors and block factors, each block in its
      // semistandard orders (i1 > i2 < i3 < ..., i2 minimal)
      std::vector<ProperFactor> factors;
      for (int zi = 0; zi < nz; ++zi) {
        if (tails[zi].empty()) {
          factors.push_back({true, {zslots[zi]}});
        } else {
          std::vector<int> slots{zslots[zi]};
          slots.insert(slots.end(), tails[zi].begin(), tails[zi].end());
          factors.push_back({false, slots});
        }
      }
      // each block contributes (size-1) semistandard orderings
      std::vector<std::vector<ProperFactor>> block_choices;
      for (const auto& b : blocks) {
        std::vector<ProperFactor> forms;
        for (size_t lead = 1; lead < b.size(); ++lead) {
          std::vector<int> ord{b[lead], b[0]};
          for (size_t j = 1; j < b.size(); ++j)
            if (j != lead) ord.push_back(b[j]);
          forms.push_back({false, ord});
        }
        block_choices.push_back(forms);
      }
      std::vector<ProperFactor> chosen(blocks.size());
      auto pick_forms = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
          std::vector<ProperFactor> all = factors;
          all.insert(all.end(), chosen.begin(), chosen.end());
          std::vector<int> idx(all.size());
          std::iota(idx.begin(), idx.end(), 0);
          std::sort(idx.begin(), idx.end());
          do {
            ProperProduct p;
            std::vector<int> degseq;
            for (int i : idx) {
              p.factors.push_back(all[i]);
              degseq.push_back(degs[all[i].slots[0]]);
            }
            if (degseq.empty()) {
              out.push_back(p);
              continue;
            }
            if (is_good_sequence(algebra.grading(), DegreeSequence(degseq)).good)
              out.push_back(p);
          } while (std::next_permutation(idx.begin(), idx.end()));
          return;
        }
        for (const ProperFactor& f : block_choices[bi]) {
          chosen[bi] = f;
          self(self, bi + 1);
        }
      };
      pick_forms(pick_forms, 0);
    };
    auto partition_pool = [&](auto&& self, std::vector<int> rest) -> void {
      if (rest.empty()) {
        with_blocks();
        return;
      }
      int head = rest[0];
      int r = static_cast<int>(rest.size());
      // choose the block containing head: head plus a nonempty subset
      for (int mask = 1; mask < (1 << (r - 1)); ++mask) {
        std::vector<int> block{head}, next;
        for (int i = 1; i < r; ++i)
          ((mask >> (i - 1)) & 1 ? block : next).push_back(rest[i]);
        blocks.push_back(block);
        self(self, next);
        blocks.pop_back();
      }
    };
    partition_pool(partition_pool, pool);
  };
  auto assign = [&](auto&& self, int i) -> void {
    if (i == ny) {
      emit_for_assignment();
      return;
    }
    for (int c = 0; c <= nz; ++c) {
      container[i] = c;
      self(self, i + 1);
    }
  };
  assign(assign, 0);
  return out;
}

namespace {

DenseMatrix unit_matrix(int m, const MatrixUnit& u) {
  DenseMatrix M(m * m, 0);
  M[(u.row - 1) * m + (u.col - 1)] = 1;
  return M;
}

DenseMatrix identity_matrix(int m) {
  DenseMatrix M(m * m, 0);
  for (int i = 0; i < m; ++i) M[i * m + i] = 1;
  return M;
}

bool is_zero(const DenseMatrix& A) {
  for (long long x : A)
    if (x) return false;
  return true;
}

DenseMatrix mat_mul(int m, const DenseMatrix& A, const DenseMatrix& B) {
  DenseMatrix C(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      long long a = A[i * m + k];
      if (!a) continue;
      for (int j = 0; j < m; ++j) C[i * m + j] += a * B[k * m + j];
    }
  return C;
}

DenseMatrix commutator(int m, const DenseMatrix& A, const DenseMatrix& B) {
  DenseMatrix C = mat_mul(m, A, B);
  DenseMatrix D = mat_mul(m, B, A);
  for (size_t i = 0; i < C.size(); ++i) C[i] -= D[i];
  return C;
}

DenseMatrix factor_value(int m, const ProperFactor& f,
                         const std::vector<DenseMatrix>& slot_values) {
  if (f.bare) return slot_values[f.slots[0]];
  DenseMatrix acc = slot_values[f.slots[0]];
  for (size_t i = 1; i < f.slots.size(); ++i)
    acc = commutator(m, acc, slot_values[f.slots[i]]);
  return acc;
}

}  // namespace

DenseMatrix evaluate_product(const GradedMatrixAlgebra& algebra,
                             const ProperProduct& p,
                             const std::vector<int>& slot_degs,
                             const std::vector<MatrixUnit>& assignment) {
  int m = algebra.order();
  if (assignment.size() != slot_degs.size())
    throw std::invalid_argument("evaluate_product: assignment arity");
  std::vector<DenseMatrix> vals;
  vals.reserve(assignment.size());
  for (size_t s = 0; s < assignment.size(); ++s) {
    const MatrixUnit& u = assignment[s];
    int expected = ((slot_degs[s] % m) + m) % m;
    if (unit_degree(algebra.grading(), u.row, u.col) != expected)
      throw std::invalid_argument("evaluate_product: degree mismatch at slot " +
                                  std::to_string(s));
    vals.push_back(unit_matrix(m, u));
  }
  if (p.factors.empty()) return identity_matrix(m);
  DenseMatrix acc = factor_value(m, p.factors[0], vals);
  for (size_t i = 1; i < p.factors.size(); ++i)
    acc = mat_mul(m, acc, factor_value(m, p.factors[i], vals));
  return acc;
}

// ---- evaluation table ----

EvaluationTable::EvaluationTable(const GradedMatrixAlgebra& algebra,
                                 const Multidegree& l, int cap)
    : algebra_(algebra), l_(l) {
  if (l_.length() != algebra_.order())
    throw std::invalid_argument("multidegree length != algebra order");
  slot_degs_ = slot_degrees(l_);
  products_ = spanning_products(l_, cap);
  for (size_t i = 0; i < products_.size(); ++i)
    index_.emplace(products_[i], static_cast<int>(i));
  build();
}

namespace {

using SparseRow = std::vector<std::pair<long long, Rat>>;

// v -= lam * b, both sorted by column
SparseRow sparse_axpy(const SparseRow& v, const Rat& lam, const SparseRow& b) {
  SparseRow out;
  out.reserve(v.size() + b.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < b.size()) {
    if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || b[j].first < v[i].first) {
      out.emplace_back(b[j].first, -lam * b[j].second);
      ++j;
    } else {
      Rat x = v[i].second - lam * b[j].second;
      if (x != 0) out.emplace_back(v[i].first, x);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void EvaluationTable::build() {
  int m = algebra_.order();
  int n = static_cast<int>(slot_degs_.size());
  coords_.assign(products_.size(), {});

  std::vector<std::vector<MatrixUnit>> choices(n);
  bool has_assignments = true;
  for (int s = 0; s < n; ++s) {
    choices[s] = algebra_.units_of_degree(slot_degs_[s]);
    if (choices[s].empty()) has_assignments = false;
  }
  if (!has_assignments) return;  // every row is zero; rank 0

  std::vector<long long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s)
    stride[s] = stride[s + 1] * static_cast<long long>(choices[s + 1].size());

  // echelon state
  std::vector<SparseRow> ech;
  std::vector<long long> pivots;
  std::vector<Rat> pivvals;
  std::vector<std::vector<Rat>> E;  // ech rows over pivot originals

  struct FactorEntry {
    long long flat;
    DenseMatrix value;
  };

  for (size_t pi = 0; pi < products_.size(); ++pi) {
    const ProperProduct& p = products_[pi];
    std::vector<std::pair<long long, long long>> entries;

    if (p.factors.empty()) {
      DenseMatrix id = identity_matrix(m);
      for (int pos = 0; pos < m * m; ++pos)
        if (id[pos]) entries.emplace_back(pos, id[pos]);
    } else {
      // nonzero values of each factor over assignments of its own slots
      std::vector<std::vector<FactorEntry>> tables(p.factors.size());
      bool any_empty = false;
      for (size_t fi = 0; fi < p.factors.size(); ++fi) {
        const ProperFactor& f = p.factors[fi];
        int t = static_cast<int>(f.slots.size());
        std::vector<int> odo(t, 0);
        std::vector<DenseMatrix> vals(n);
        while (true) {
          long long flat = 0;
          for (int i = 0; i < t; ++i) {
            vals[f.slots[i]] = unit_matrix(m, choices[f.slots[i]][odo[i]]);
            flat += odo[i] * stride[f.slots[i]];
          }
          DenseMatrix v = factor_value(m, f, vals);
          if (!is_zero(v)) tables[fi].push_back({flat, std::move(v)});
          int i = t - 1;
          while (i >= 0 &&
                 ++odo[i] == static_cast<int>(choices[f.slots[i]].size())) {
            odo[i] = 0;
            --i;
          }
          if (i < 0) break;
        }
        if (tables[fi].empty()) {
          any_empty = true;
          break;
        }
      }
      if (!any_empty) {
        auto walk = [&](auto&& self, size_t fi, long long flat,
                        const DenseMatrix& acc) -> void {
          if (fi == p.factors.size()) {
            for (int pos = 0; pos < m * m; ++pos)
              if (acc[pos]) entries.emplace_back(flat * m * m + pos, acc[pos]);
            return;
          }
          for (const FactorEntry& e : tables[fi]) {
            DenseMatrix next =
                fi == 0 ? e.value : mat_mul(m, acc, e.value);
            if (is_zero(next)) continue;
            self(self, fi + 1, flat + e.flat, next);
          }
        };
        walk(walk, 0, 0, DenseMatrix());
      }
    }

    std::sort(entries.begin(), entries.end());
    SparseRow v;
    v.reserve(entries.size());
    for (auto& [col, val] : entries)
      v.emplace_back(col, Rat(static_cast<long>(val)));

    // reduce against the echelon basis, tracking pivot-row coordinates
    std::vector<Rat> acc(ech.size(), Rat(0));
    for (size_t k = 0; k < ech.size(); ++k) {
      auto it = std::lower_bound(
          v.begin(), v.end(), pivots[k],
          [](const std::pair<long long, Rat>& a, long long col) {
            return a.first < col;
          });
      if (it == v.end() || it->first != pivots[k]) continue;
      Rat lam = it->second / pivvals[k];
      v = sparse_axpy(v, lam, ech[k]);
      for (size_t j = 0; j <= k; ++j) acc[j] += lam * E[k][j];
    }
    if (v.empty()) {
      coords_[pi] = std::move(acc);
    } else {
      size_t t = ech.size();
      std::vector<Rat> erow(t + 1, Rat(0));
      for (size_t j = 0; j < t; ++j) erow[j] = -acc[j];
      erow[t] = 1;
      std::vector<Rat> selfc(t + 1, Rat(0));
      selfc[t] = 1;
      coords_[pi] = std::move(selfc);
      pivots.push_back(v.front().first);
      pivvals.push_back(v.front().second);
      ech.push_back(std::move(v));
      E.push_back(std::move(erow));
      pivot_rows_.push_back(static_cast<int>(pi));
    }
  }
  for (auto& c : coords_) c.resize(pivot_rows_.size(), Rat(0));
}

bool EvaluationTable::row_is_zero(int product_index) const {
  for (const Rat& c : coords_[product_index])
    if (c != 0) return false;
  return true;
}

Rat EvaluationTable::trace(const std::vector<int>& perm) const {
  Rat t = 0;
  for (size_t k = 0; k < pivot_rows_.size(); ++k) {
    ProperProduct q = products_[pivot_rows_[k]].relabeled(perm);
    auto it = index_.find(q);
    if (it == index_.end())
      throw std::logic_error("relabeled product missing from spanning set");
    t += coords_[it->second][k];
  }
  return t;
}

Int gamma_oracle(const GradedMatrixAlgebra& algebra, const Multidegree& l,
                 int cap) {
  return Int(EvaluationTable(algebra, l, cap).rank());
}

namespace {

// canonical permutation of cycle type mu within the slot range [off, off+k)
void apply_cycles(std::vector<int>& perm, int off, const Partition& mu) {
  int pos = off;
  for (int c : mu.parts()) {
    for (int i = 0; i < c; ++i) perm[pos + i] = pos + (i + 1) % c;
    pos += c;
  }
}

}  // namespace

MultiCharacter xi_oracle(const GradedMatrixAlgebra& algebra,
                         const Multidegree& l, int cap) {
  EvaluationTable table(algebra, l, cap);
  MultiCharacter out(l);
  if (table.rank() == 0) return out;
  int m = l.length();
  int n = l.total();

  std::vector<int> offset(m, 0);
  for (int j = 1; j < m; ++j) offset[j] = offset[j - 1] + l[j - 1];

  std::vector<std::vector<Partition>> classes(m);
  for (int j = 0; j < m; ++j) classes[j] = partitions_of(l[j]);

  // trace per tuple of cycle types
  std::map<std::vector<Partition>, Rat> traces;
  std::vector<Partition> ct(m);
  auto walk_classes = [&](auto&& self, int j) -> void {
    if (j == m) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int g = 0; g < m; ++g) apply_cycles(perm, offset[g], ct[g]);
      traces[ct] = table.trace(perm);
      return;
    }
    for (const Partition& mu : classes[j]) {
      ct[j] = mu;
      self(self, j + 1);
    }
  };
  walk_classes(walk_classes, 0);

  Rat order(1);
  for (int j = 0; j < m; ++j) order *= Rat(factorial(l[j]));

  std::vector<Partition> key(m);
  auto walk_keys = [&](auto&& self, int j) -> void {
    if (j == m) {
      Rat s = 0;
      for (const auto& [mu, tr] : traces) {
        if (tr == 0) continue;
        Rat w = tr;
        for (int g = 0; g < m; ++g)
          w *= Rat(conjugacy_class_size(mu[g]) *
                   mn_character_value(key[g], mu[g]));
        s += w;
      }
      s /= order;
      Int mult;
      if (!rat_to_int(s, &mult) || mult < 0)
        throw NotACharacter("multidegree " + l.to_string() +
                            ": multiplicity of " + key[0].to_string() +
                            "... is " + std::string(s.get_str()));
      if (mult != 0) out.add(key, mult);
      return;
    }
    for (const Partition& lam : classes[j]) {
      key[j] = lam;
      self(self, j + 1);
    }
  };
  walk_keys(walk_keys, 0);

  // character consistency: dimensions must match the rank
  if (out.total_dimension() != table.rank())
    throw NotACharacter("multidegree " + l.to_string() +
                        ": decomposed dimension != rank");
  return out;
}

OracleResult xi_n_oracle(const GradedMatrixAlgebra& algebra, int n, int cap) {
  if (n > cap)
    throw CapExceeded("n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  OracleResult res;
  res.xi = CharacterSum(n);
  for (const Multidegree& l : multidegrees_of(n, algebra.order())) {
    MultiCharacter mc = xi_oracle(algebra, l, cap);
    Int gl = mc.total_dimension();
    res.breakdown[l] = gl;
    res.gamma += multinomial(l.parts) * gl;
    if (!mc.terms().empty()) {
      res.multidegrees.emplace(l, mc);
      res.xi += induce_multicharacter(mc);
    }
  }
  return res;
}

bool is_identity_on(const GradedMatrixAlgebra& algebra, const ProperProduct& p,
                    const std::vector<int>& slot_degs) {
  int n = static_cast<int>(slot_degs.size());
  std::vector<std::vector<MatrixUnit>> choices(n);
  for (int s = 0; s < n; ++s) {
    choices[s] = algebra.units_of_degree(slot_degs[s]);
    if (choices[s].empty()) return true;  // only the zero substitution exists
  }
  std::vector<int> odo(n, 0);
  std::vector<MatrixUnit> assignment(n);
  while (true) {
    for (int s = 0; s < n; ++s) assignment[s] = choices[s][odo[s]];
    if (!is_zero(evaluate_product(algebra, p, slot_degs, assignment)))
      return false;
    int i = n - 1;
    while (i >= 0 && ++odo[i] == static_cast<int>(choices[i].size())) {
      odo[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return true;
}

std::pair<ProperProduct, std::vector<int>> generator_product(
    const DegreeSequence& eta) {
  ProperProduct p;
  std::vector<int> degs;
  for (int d : eta.entries) {
    if (d == 0) {
      int a = static_cast<int>(degs.size());
      degs.push_back(0);
      degs.push_back(0);
      p.factors.push_back({false, {a, a + 1}});
    } else {
      int a = static_cast<int>(degs.size());
      degs.push_back(d);
      p.factors.push_back({true, {a}});
    }
  }
  return {p, degs};
}

}  // namespace cocharlab
