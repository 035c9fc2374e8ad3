#include "cocharlab/published_tables.hpp"

#include <cassert>

#include "cocharlab/errors.hpp"

namespace cocharlab {

namespace {

Int pow_int(int base, int exp) {
  assert(exp >= 0);
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// shorthands for rule construction
using MatchFn =
    std::function<std::optional<std::pair<long, long>>(const Partition&)>;
using ValueFn = std::function<Rat(long, long)>;

PublishedRule rule(std::string printed, std::string source, MatchFn match,
                   ValueFn value) {
  return PublishedRule{std::move(printed), std::move(source), std::move(match),
                       std::move(value)};
}

std::optional<std::pair<long, long>> no_match() { return std::nullopt; }

// lambda == (a, fixed tail...) with a parameter range
MatchFn tail_is(std::vector<int> tail, long amin) {
  return [tail = std::move(tail), amin](const Partition& p)
             -> std::optional<std::pair<long, long>> {
    if (p.length() != static_cast<int>(tail.size()) + 1) return no_match();
    for (size_t i = 0; i < tail.size(); ++i)
      if (p.part(static_cast<int>(i) + 2) != tail[i]) return no_match();
    long a = p.part(1);
    if (a < amin) return no_match();
    // keep the tail from aliasing the parameter: (a,2) with a=2 is (2,2),
    // which the printed ranges exclude anyway
    if (!tail.empty() && a < tail[0]) return no_match();
    return std::make_pair(a, 0L);
  };
}

MatchFn exact(std::vector<int> shape) {
  return [shape = std::move(shape)](const Partition& p)
             -> std::optional<std::pair<long, long>> {
    if (p.parts() == shape) return std::make_pair(0L, 0L);
    return no_match();
  };
}

}  // namespace

std::vector<PublishedValue> PublishedTable::gamma_at(int n) const {
  std::vector<PublishedValue> out;
  for (const auto& f : gamma_forms_) {
    if (n < f.min_n)
      throw PatternNotCovered("printed gamma form for m=" + std::to_string(m_) +
                              " starts at n=" + std::to_string(f.min_n));
    out.push_back({f.eval(n), f.source + " (" + f.label + ")"});
  }
  return out;
}

PublishedValue PublishedTable::multiplicity(const Partition& lambda) const {
  if (!n_shape_terms_.empty()) {
    int n = lambda.weight();
    if (n < min_n_)
      throw PatternNotCovered("printed table for m=" + std::to_string(m_) +
                              " starts at n=" + std::to_string(min_n_));
    Int total = 0;
    for (const auto& t : n_shape_terms_) {
      auto p = Partition::normalized(t.shape_at(n));
      if (p && *p == lambda) total += t.coeff;
    }
    return {total, table_source_};
  }
  for (const auto& r : rules_) {
    if (auto ab = r.match(lambda)) {
      Rat v = r.value(ab->first, ab->second);
      Int out;
      if (!rat_to_int(v, &out))
        throw std::logic_error("published closed form not integral at " +
                               lambda.to_string());
      return {out, r.source};
    }
  }
  throw PatternNotCovered("lambda=" + lambda.to_string() +
                          " falls in no printed case of the UT_" +
                          std::to_string(m_) + " table");
}

bool PublishedTable::covers(const Partition& lambda) const {
  if (!n_shape_terms_.empty()) return lambda.weight() >= min_n_;
  for (const auto& r : rules_)
    if (r.match(lambda)) return true;
  return false;
}

PublishedXi PublishedTable::xi_at(int n) const {
  PublishedXi out{CharacterSum(n), {}};
  if (n < min_n_)
    throw PatternNotCovered("printed table for m=" + std::to_string(m_) +
                            " starts at n=" + std::to_string(min_n_));
  if (!n_shape_terms_.empty()) {
    for (const auto& t : n_shape_terms_) {
      auto shape = t.shape_at(n);
      auto p = Partition::normalized(shape);
      if (p) {
        out.xi.add(*p, t.coeff);
      } else {
        std::string s = "(";
        for (size_t i = 0; i < shape.size(); ++i)
          s += (i ? "," : "") + std::to_string(shape[i]);
        s += ")";
        out.normalization_notes.push_back(
            "degenerate printed shape " + s + " from " + t.printed +
            " at n=" + std::to_string(n) + " dropped");
      }
    }
    return out;
  }
  for (const Partition& lam : partitions_of(n))
    if (covers(lam)) out.xi.add(lam, multiplicity(lam).value);
  return out;
}

Int PublishedTable::covered_dimension_at(int n) const {
  Int total = 0;
  for (const Partition& lam : partitions_of(n))
    if (covers(lam)) total += multiplicity(lam).value * hook_dimension(lam);
  return total;
}

PublishedTable PublishedTable::make_ut2() {
  PublishedTable t;
  t.m_ = 2;
  t.table_source_ = "Thm 4.1 table";
  t.min_n_ = 2;
  t.n_shape_terms_.push_back(
      {1, "[(n-1,1)]", [](int n) { return std::vector<long>{n - 1, 1}; }});
  t.gamma_forms_.push_back({"statement", "Thm 4.1", "n-1", 2,
                            [](int n) -> Int { return Int(n - 1); }});
  return t;
}

PublishedTable PublishedTable::make_ut3() {
  PublishedTable t;
  t.m_ = 3;
  t.table_source_ = "Thm 4.2 table";
  t.min_n_ = 2;
  t.n_shape_terms_.push_back(
      {2, "2[(n-1,1)]", [](int n) { return std::vector<long>{n - 1, 1}; }});
  t.n_shape_terms_.push_back(
      {1, "[(n-2,1^2)]", [](int n) { return std::vector<long>{n - 2, 1, 1}; }});
  t.n_shape_terms_.push_back(
      {1, "[(n-2,2)]", [](int n) { return std::vector<long>{n - 2, 2}; }});
  t.gamma_forms_.push_back({"statement", "Thm 4.2", "2n-1", 2,
                            [](int n) -> Int { return Int(2 * n - 1); }});
  // Cor 3.5(1) proof list, as printed
  for (auto& e : std::initializer_list<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}})
    t.printed_bad_.emplace_back(e);
  return t;
}

PublishedTable PublishedTable::make_ut4() {
  PublishedTable t;
  t.m_ = 4;
  t.min_n_ = 2;
  const std::string src = "Thm 5.1 table";
  auto& r = t.rules_;
  r.push_back(rule("a+2 if (a,1), a>=4", src, tail_is({1}, 4),
                   [](long a, long) -> Rat { return Rat(a + 2); }));
  r.push_back(rule("6 if (3,2)", src, exact({3, 2}),
                   [](long, long) -> Rat { return Rat(6); }));
  r.push_back(rule("3(a-1) if (a,2), a>=4", src, tail_is({2}, 4),
                   [](long a, long) -> Rat { return Rat(3 * (a - 1)); }));
  r.push_back(rule("5 if (b,b), b>=3", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(1) == p.part(2) &&
                         p.part(2) >= 3)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(5); }));
  r.push_back(rule("8 if (b+1,b), b>=3", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(1) == p.part(2) + 1 &&
                         p.part(2) >= 3)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(8); }));
  r.push_back(rule("4(a-b+1) if (a,b), b>=3, a>=b+2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(2) >= 3 &&
                         p.part(1) >= p.part(2) + 2)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(4 * (a - b + 1)); }));
  r.push_back(rule("3a-2 if (a,1,1), a>=2", src, tail_is({1, 1}, 2),
                   [](long a, long) -> Rat { return Rat(3 * a - 2); }));
  r.push_back(rule("5 if (2,2,1)", src, exact({2, 2, 1}),
                   [](long, long) -> Rat { return Rat(5); }));
  r.push_back(rule("12 if (3,2,1)", src, exact({3, 2, 1}),
                   [](long, long) -> Rat { return Rat(12); }));
  r.push_back(rule("7a-9 if (a,2,1), a>3", src, tail_is({2, 1}, 4),
                   [](long a, long) -> Rat { return Rat(7 * a - 9); }));
  r.push_back(rule("9 if (b,b,1), b>3", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 1 &&
                         p.part(1) == p.part(2) && p.part(2) > 3)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(9); }));
  r.push_back(rule("15 if (b+1,b,1), b>3", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 1 &&
                         p.part(1) == p.part(2) + 1 && p.part(2) > 3)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(15); }));
  r.push_back(rule("8(a-b+1) if (a,b,1), b>=3, a>=b+2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 1 && p.part(2) >= 3 &&
                         p.part(1) >= p.part(2) + 2)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(8 * (a - b + 1)); }));
  r.push_back(rule("5 if (b,b,2), b>=2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 2 &&
                         p.part(1) == p.part(2) && p.part(2) >= 2)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(5); }));
  r.push_back(rule("5(a-b+1) if (a,b,2), a>=b+2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 2 &&
                         p.part(1) >= p.part(2) + 2)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(5 * (a - b + 1)); }));
  r.push_back(rule("1 if (1^4)", src, exact({1, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(1); }));
  r.push_back(rule("3a-2 if (a,1^3), a>=2", src, tail_is({1, 1, 1}, 2),
                   [](long a, long) -> Rat { return Rat(3 * a - 2); }));
  r.push_back(rule("5 if (b,b,1^2)", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 4 && p.part(3) == 1 && p.part(4) == 1 &&
                         p.part(1) == p.part(2) && p.part(2) >= 2)
                       return std::make_pair(0L, (long)p.part(2));
                     return no_match();
                   },
                   [](long, long) -> Rat { return Rat(5); }));
  r.push_back(rule("5(a-b+1) if (a,b,1^2), a>=b+1, b>=2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 4 && p.part(3) == 1 && p.part(4) == 1 &&
                         p.part(2) >= 2 && p.part(1) >= p.part(2) + 1)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(5 * (a - b + 1)); }));
  r.push_back(rule("2(a-b+1) if (a,b,2,1), a>=b+1, b>=2", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 4 && p.part(3) == 2 && p.part(4) == 1 &&
                         p.part(2) >= 2 && p.part(1) >= p.part(2) + 1)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(2 * (a - b + 1)); }));
  r.push_back(rule("a-b+1 if (a,b,3), a>=b+1, b>=3", src,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 3 && p.part(3) == 3 && p.part(2) >= 3 &&
                         p.part(1) >= p.part(2) + 1)
                       return std::make_pair((long)p.part(1), (long)p.part(2));
                     return no_match();
                   },
                   [](long a, long b) -> Rat { return Rat(a - b + 1); }));
  t.gamma_forms_.push_back(
      {"statement", "Thm 5.1", "3n+2^{n-2}n(n-1)-1", 2, [](int n) -> Int {
         return Int(3 * n) + pow_int(2, n - 2) * n * (n - 1) - 1;
       }});
  for (auto& e : std::initializer_list<std::vector<int>>{
           {0, 0}, {0, 1}, {1, 2}, {2, 2}, {0, 2, 0}, {1, 1, 1}, {2, 0, 2}})
    t.printed_bad_.emplace_back(e);
  return t;
}

PublishedTable PublishedTable::make_ut5() {
  PublishedTable t;
  t.m_ = 5;
  t.min_n_ = 3;
  const std::string hooks = "Thm 6.1 table";
  const std::string tworow = "Thm 6.2 table";
  auto& r = t.rules_;
  auto hook_tail = [](int ones) {
    std::vector<int> tail(ones, 1);
    return tail;
  };
  r.push_back(rule("a^2-2a+11 if (a,1), a>=3", hooks, tail_is(hook_tail(1), 3),
                   [](long a, long) -> Rat { return Rat(a * a - 2 * a + 11); }));
  r.push_back(rule("23 if (3,1^2)", hooks, exact({3, 1, 1}),
                   [](long, long) -> Rat { return Rat(23); }));
  r.push_back(rule("3a^2-3a+5 if (a,1^2), a>=4", hooks,
                   tail_is(hook_tail(2), 4),
                   [](long a, long) -> Rat { return Rat(3 * a * a - 3 * a + 5); }));
  r.push_back(rule("17 if (2,1^3)", hooks, exact({2, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(17); }));
  r.push_back(rule("34 if (3,1^3)", hooks, exact({3, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(34); }));
  r.push_back(rule("4a^2-a if (a,1^3), a>=4", hooks, tail_is(hook_tail(3), 4),
                   [](long a, long) -> Rat { return Rat(4 * a * a - a); }));
  r.push_back(rule("3 if (1^5)", hooks, exact({1, 1, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(3); }));
  r.push_back(rule("12 if (2,1^4)", hooks, exact({2, 1, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(12); }));
  r.push_back(rule("3a^2-2a+2 if (a,1^4), a>=3", hooks,
                   tail_is(hook_tail(4), 3),
                   [](long a, long) -> Rat { return Rat(3 * a * a - 2 * a + 2); }));
  r.push_back(rule("2 if (1^6)", hooks, exact({1, 1, 1, 1, 1, 1}),
                   [](long, long) -> Rat { return Rat(2); }));
  r.push_back(rule("2a^2 if (a,1^5), a>=2", hooks, tail_is(hook_tail(5), 2),
                   [](long a, long) -> Rat { return Rat(2 * a * a); }));
  r.push_back(rule("a(a+1)/2 if (a,1^6), a>=1", hooks, tail_is(hook_tail(6), 1),
                   [](long a, long) -> Rat { return Rat(a * (a + 1)) / 2; }));
  // two-row table
  r.push_back(rule("10 if (3,2)", tworow, exact({3, 2}),
                   [](long, long) -> Rat { return Rat(10); }));
  r.push_back(rule("37 if (4,2)", tworow, exact({4, 2}),
                   [](long, long) -> Rat { return Rat(37); }));
  r.push_back(rule("(7a^2-11a+6)/2 if (a,2), a>=5", tworow, tail_is({2}, 5),
                   [](long a, long) -> Rat { return Rat(7 * a * a - 11 * a + 6) / 2; }));
  r.push_back(rule("18 if (3,3)", tworow, exact({3, 3}),
                   [](long, long) -> Rat { return Rat(18); }));
  r.push_back(rule("52 if (4,3)", tworow, exact({4, 3}),
                   [](long, long) -> Rat { return Rat(52); }));
  r.push_back(rule("102 if (5,3)", tworow, exact({5, 3}),
                   [](long, long) -> Rat { return Rat(102); }));
  r.push_back(rule("7a^2-13a-6 if (a,3), a>=6", tworow, tail_is({3}, 6),
                   [](long a, long) -> Rat { return Rat(7 * a * a - 13 * a - 6); }));
  r.push_back(rule("3a^2+1 if (a,a), a>=4", tworow,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(1) == p.part(2) &&
                         p.part(1) >= 4)
                       return std::make_pair((long)p.part(1), 0L);
                     return no_match();
                   },
                   [](long a, long) -> Rat { return Rat(3 * a * a + 1); }));
  r.push_back(rule("6a^2-6a-5 if (a,a-1), a>=5", tworow,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(1) == p.part(2) + 1 &&
                         p.part(1) >= 5)
                       return std::make_pair((long)p.part(1), 0L);
                     return no_match();
                   },
                   [](long a, long) -> Rat { return Rat(6 * a * a - 6 * a - 5); }));
  r.push_back(rule("3(3a^2-6a-4) if (a,a-2), a>=6", tworow,
                   [](const Partition& p) -> std::optional<std::pair<long, long>> {
                     if (p.length() == 2 && p.part(1) == p.part(2) + 2 &&
                         p.part(1) >= 6)
                       return std::make_pair((long)p.part(1), 0L);
                     return no_match();
                   },
                   [](long a, long) -> Rat { return Rat(3 * (3 * a * a - 6 * a - 4)); }));
  r.push_back(rule(
      "(5a^2b-5ab^2+12ab-3a^2-3b^2+2b-2a-2)/2 if (a,b), a,b>=3, a-b>=3", tworow,
      [](const Partition& p) -> std::optional<std::pair<long, long>> {
        if (p.length() == 2 && p.part(2) >= 3 && p.part(1) - p.part(2) >= 3)
          return std::make_pair((long)p.part(1), (long)p.part(2));
        return no_match();
      },
      [](long a, long b) -> Rat {
        return Rat(5 * a * a * b - 5 * a * b * b + 12 * a * b - 3 * a * a -
                   3 * b * b + 2 * b - 2 * a - 2) /
               2;
      }));
  t.gamma_forms_.push_back(
      {"statement", "Thm 6.1",
       "4n+n(n-1)+3*2^{n-3}n(n-1)+3^{n-3}n(n-1)(n-2)-1", 3, [](int n) -> Int {
         return Int(4 * n) + Int(n) * (n - 1) +
                3 * pow_int(2, n - 3) * n * (n - 1) +
                pow_int(3, n - 3) * n * (n - 1) * (n - 2) - 1;
       }});
  t.gamma_forms_.push_back(
      {"proof", "Thm 6.1", "4n+2^{n-1}n(n-1)+3^{n-3}n(n-1)(n-2)-1", 3,
       [](int n) -> Int {
         return Int(4 * n) + pow_int(2, n - 1) * n * (n - 1) +
                pow_int(3, n - 3) * n * (n - 1) * (n - 2) - 1;
       }});
  for (auto& e : std::initializer_list<std::vector<int>>{
           {0, 0}, {1, 0}, {1, 3}, {2, 0}, {2, 2}, {2, 3}, {3, 0}, {3, 1},
           {3, 2}, {3, 3}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {2, 1, 1},
           {2, 1, 2}})
    t.printed_bad_.emplace_back(e);
  return t;
}

const PublishedTable& published_table(int m) {
  static const PublishedTable ut2 = PublishedTable::make_ut2();
  static const PublishedTable ut3 = PublishedTable::make_ut3();
  static const PublishedTable ut4 = PublishedTable::make_ut4();
  static const PublishedTable ut5 = PublishedTable::make_ut5();
  switch (m) {
    case 2: return ut2;
    case 3: return ut3;
    case 4: return ut4;
    case 5: return ut5;
  }
  throw PatternNotCovered("no published table for m=" + std::to_string(m));
}

PublishedValue published_example_bound(int m, int n) {
  if (m == 3) return {Int(3 * n - 6), "Example 7.5 (m_lambda <= 3n-6)"};
  if (m == 4)
    return {Int(2) * n * n - 5 * n - 7, "Example 7.6 (m_lambda <= 2n^2-5n-7)"};
  throw PatternNotCovered("no printed example bound for m=" + std::to_string(m));
}

}  // namespace cocharlab
