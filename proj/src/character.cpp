#include "cocharlab/character.hpp"

#include <algorithm>
#include <sstream>

namespace cocharlab {

CharacterSum CharacterSum::irreducible(const Partition& p) {
  CharacterSum c(p.weight());
  c.add(p, 1);
  return c;
}

CharacterSum CharacterSum::unit() { return irreducible(Partition()); }

Int CharacterSum::multiplicity(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

void CharacterSum::add(const Partition& p, const Int& mult) {
  if (p.weight() != degree_)
    throw std::invalid_argument("CharacterSum: partition weight " +
                                std::to_string(p.weight()) +
                                " != degree " + std::to_string(degree_));
  if (mult == 0) return;
  Int& slot = terms_[p];
  slot += mult;
  if (slot < 0) throw std::invalid_argument("CharacterSum: negative multiplicity");
  if (slot == 0) terms_.erase(p);
}

Int CharacterSum::total_dimension() const {
  Int d = 0;
  for (const auto& [p, m] : terms_) d += m * hook_dimension(p);
  return d;
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& other) {
  for (const auto& [p, m] : other.terms_) add(p, m);
  return *this;
}

std::string CharacterSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : terms_) {
    if (!first) os << "+";
    first = false;
    if (m != 1) os << m.get_str();
    os << '[' << p.to_string() << ']';
  }
  return os.str();
}

void MultiCharacter::add(const std::vector<Partition>& key, const Int& mult) {
  if (static_cast<int>(key.size()) != multidegree_.length())
    throw std::invalid_argument("MultiCharacter: key arity mismatch");
  for (int i = 0; i < multidegree_.length(); ++i)
    if (key[i].weight() != multidegree_[i])
      throw std::invalid_argument("MultiCharacter: component weight mismatch");
  if (mult == 0) return;
  Int& slot = terms_[key];
  slot += mult;
  if (slot < 0)
    throw std::invalid_argument("MultiCharacter: negative multiplicity");
  if (slot == 0) terms_.erase(key);
}

Int MultiCharacter::total_dimension() const {
  Int d = 0;
  for (const auto& [key, m] : terms_) {
    Int prod = m;
    for (const Partition& p : key) prod *= hook_dimension(p);
    d += prod;
  }
  return d;
}

std::string MultiCharacter::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, m] : terms_) {
    if (!first) os << "+";
    first = false;
    if (m != 1) os << m.get_str();
    for (const Partition& p : key) os << '[' << p.to_string() << ']';
  }
  return os.str();
}

// ---- LR rule ----

namespace {

// Cells of lambda/mu in reverse-reading-word order: rows top to bottom,
// right to left within a row. Filling in this order makes the lattice
// prefix condition checkable cell by cell.
struct SkewFiller {
  const Partition& lam;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::pair<int, int>> cells;       // (row, col), 1-based rows
  std::vector<std::vector<int>> fill;           // fill[row][col], -1 empty
  std::vector<int> counts;
  Int count = 0;

  SkewFiller(const Partition& l, const Partition& m, const Partition& n)
      : lam(l), mu(m), nu(n) {
    fill.assign(lam.length() + 1, {});
    for (int i = 1; i <= lam.length(); ++i) {
      fill[i].assign(lam.part(i) + 2, -1);
      for (int j = lam.part(i); j > m.part(i); --j) cells.push_back({i, j});
    }
    counts.assign(nu.length(), 0);
  }

  void run(size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < nu.length(); ++v) {
      if (counts[v] >= nu.part(v + 1)) continue;
      if (v > 0 && counts[v] + 1 > counts[v - 1]) continue;  // lattice word
      if (j + 1 <= lam.part(i) && fill[i][j + 1] >= 0 && v > fill[i][j + 1])
        continue;  // weakly increasing along the row
      if (i > 1 && j > mu.part(i - 1) && j <= lam.part(i - 1) &&
          fill[i - 1][j] >= v)
        continue;  // strictly increasing down the column
      fill[i][j] = v;
      ++counts[v];
      run(k + 1);
      --counts[v];
      fill[i][j] = -1;
    }
  }
};

bool contains(const Partition& lam, const Partition& mu) {
  if (mu.length() > lam.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (lam.part(i) < mu.part(i)) return false;
  return true;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  if (!contains(lambda, mu)) return 0;
  SkewFiller f(lambda, mu, nu);
  f.run(0);
  return f.count;
}

std::map<Partition, Int> lr_expand_general(const Partition& mu,
                                           const Partition& nu) {
  std::map<Partition, Int> out;
  for (const Partition& lam : partitions_of(mu.weight() + nu.weight())) {
    Int c = lr_coefficient(lam, mu, nu);
    if (c != 0) out[lam] = c;
  }
  return out;
}

std::map<Partition, Int> pieri_row(const Partition& mu, int k) {
  // add a horizontal strip of size k: choose how many boxes go to each row,
  // row i taking at most lam_{i-1} - mu_i new boxes above the next row
  std::map<Partition, Int> out;
  int rows = mu.length() + 1;
  std::vector<int> add(rows, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == rows) {
      if (rem != 0) return;
      std::vector<long> shape;
      for (int r = 0; r < rows; ++r) shape.push_back(mu.part(r + 1) + add[r]);
      if (auto p = Partition::normalized(shape)) out[*p] += 1;
      return;
    }
    // no two added boxes share a column: row i+1 may grow at most up to
    // mu_i's old length
    int hi = (i == 0) ? rem : std::min(rem, mu.part(i) - mu.part(i + 1));
    for (int a = 0; a <= hi; ++a) {
      add[i] = a;
      self(self, i + 1, rem - a);
    }
    add[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

std::map<Partition, Int> pieri_column(const Partition& mu, int k) {
  // vertical strip: conjugate, add horizontal strip, conjugate back
  std::map<Partition, Int> out;
  for (const auto& [p, c] : pieri_row(conjugate(mu), k)) out[conjugate(p)] += c;
  return out;
}

namespace {

std::map<Partition, Int> lr_expand(const Partition& mu, const Partition& nu) {
  if (nu.length() <= 1) return pieri_row(mu, nu.weight());
  if (nu.part(1) == 1) return pieri_column(mu, nu.weight());
  if (mu.length() <= 1) return pieri_row(nu, mu.weight());
  if (mu.part(1) == 1) return pieri_column(nu, mu.weight());
  return lr_expand_general(mu, nu);
}

}  // namespace

CharacterSum lr_product(const CharacterSum& a, const CharacterSum& b) {
  CharacterSum out(a.degree() + b.degree());
  for (const auto& [pa, ma] : a.terms())
    for (const auto& [pb, mb] : b.terms())
      for (const auto& [lam, c] : lr_expand(pa, pb)) out.add(lam, ma * mb * c);
  return out;
}

CharacterSum induce_product_chain(const std::vector<CharacterSum>& factors) {
  if (factors.empty())
    throw std::invalid_argument("induce_product_chain: empty factor list");
  CharacterSum acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) acc = lr_product(acc, factors[i]);
  return acc;
}

CharacterSum regular_character(int k) {
  if (k == 0) return CharacterSum::unit();
  std::vector<CharacterSum> boxes(k, CharacterSum::irreducible(Partition::row(1)));
  return induce_product_chain(boxes);
}

// ---- Murnaghan-Nakayama ----

namespace {

// Border strips of size k are parametrized by the rows i..i+h they span;
// removing one leaves row j = lam_{j+1} - 1 for j in [i, i+h) and the
// remainder in row i+h. Sign (-1)^h.
Int mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, size_t mi,
           std::map<std::vector<int>, Int>& memo) {
  if (mi == mu.size()) return 1;  // lam is empty here by weight bookkeeping
  std::vector<int> key = lam;
  key.push_back(-1 - static_cast<int>(mi));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int k = mu[mi];
  int r = static_cast<int>(lam.size());
  Int total = 0;
  for (int i = 0; i < r; ++i) {
    for (int h = 0; i + h < r; ++h) {
      // strip spans rows i..i+h; total removed is k iff the leftover in the
      // last spanned row is lam[i] + h - k
      int keep = lam[i] + h - k;
      if (keep < 0) continue;
      std::vector<int> nl = lam;
      for (int j = i; j < i + h; ++j) nl[j] = lam[j + 1] - 1;
      nl[i + h] = keep;
      bool ok = true;
      for (int j = i; j < i + h; ++j)
        if (nl[j] < 0) ok = false;
      for (size_t j = 0; j + 1 < nl.size() && ok; ++j)
        if (nl[j] < nl[j + 1]) ok = false;
      if (!ok) continue;
      while (!nl.empty() && nl.back() == 0) nl.pop_back();
      Int sub = mn_rec(nl, mu, mi + 1, memo);
      total += (h % 2 == 0) ? sub : -sub;
    }
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int mn_character_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("mn_character_value: weight mismatch");
  // memo confined to this call; safe for concurrent callers
  std::map<std::vector<int>, Int> memo;
  return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

Int cycle_type_centralizer(const CycleType& mu) {
  Int z = 1;
  int i = 0;
  const auto& parts = mu.parts();
  while (i < static_cast<int>(parts.size())) {
    int j = i;
    while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
    int a = j - i;
    for (int t = 0; t < a; ++t) z *= parts[i];
    z *= factorial(a);
    i = j;
  }
  return z;
}

Int conjugacy_class_size(const CycleType& mu) {
  return factorial(mu.weight()) / cycle_type_centralizer(mu);
}

CharacterSum decompose_class_function(int n,
                                      const std::map<CycleType, Rat>& values) {
  auto classes = partitions_of(n);
  for (const auto& mu : classes)
    if (!values.count(mu))
      throw std::invalid_argument("decompose_class_function: missing value at " +
                                  mu.to_string());
  CharacterSum out(n);
  Rat nfact(factorial(n));
  for (const Partition& lam : classes) {
    Rat ip = 0;
    for (const auto& mu : classes) {
      Rat term(conjugacy_class_size(mu) * mn_character_value(lam, mu));
      ip += term * values.at(mu);
    }
    ip /= nfact;
    Int m;
    if (!rat_to_int(ip, &m) || m < 0)
      throw NotACharacter("inner product with " + lam.to_string() + " is " +
                          std::string(ip.get_str()));
    out.add(lam, m);
  }
  return out;
}

}  // namespace cocharlab
