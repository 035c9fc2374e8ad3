#include "cocharlab/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocharlab {

bool multidegree_in_formula_range(int m, const Multidegree& l) {
  if (l.length() != m) throw std::invalid_argument("multidegree length != m");
  long weighted = 0;
  for (int j = 1; j < m; ++j) {
    if (l[j] < 0) throw std::invalid_argument("negative multidegree entry");
    weighted += static_cast<long>(l[j]) * j;
  }
  if (l[0] < 0) throw std::invalid_argument("negative multidegree entry");
  return weighted <= m - 2;
}

namespace {

CharacterSum lambda_of_s1(int s1) {
  if (s1 == 0) return CharacterSum::unit();
  // s1 == 1 cannot occur: s_compositions excludes it
  return CharacterSum::irreducible(Partition(std::vector<int>{s1 - 1, 1}));
}

}  // namespace

MultiCharacter xi_multidegree(int m, const Multidegree& l) {
  if (!multidegree_in_formula_range(m, l))
    throw NotGoodMultidegree("multidegree " + l.to_string() +
                             " outside the formula range for m=" +
                             std::to_string(m));
  int k = 0;
  for (int j = 1; j < m; ++j) k += l[j];
  Int big_n = factorial(k);
  for (int j = 1; j < m; ++j) big_n /= factorial(l[j]);

  CharacterSum ysum(l[0]);
  for (const Composition& s : s_compositions(l[0], k + 1)) {
    std::vector<CharacterSum> chain{lambda_of_s1(s[0])};
    for (int i = 1; i <= k; ++i)
      chain.push_back(CharacterSum::irreducible(Partition::row(s[i])));
    ysum += induce_product_chain(chain);
  }

  std::vector<CharacterSum> zparts;
  for (int j = 1; j < m; ++j) zparts.push_back(regular_character(l[j]));

  MultiCharacter out(l);
  std::vector<Partition> key(m);
  std::vector<std::map<Partition, Int>::const_iterator> its(m - 1);
  // walk the product of the z-part term maps
  auto rec = [&](auto&& self, int j, const Int& mult) -> void {
    if (j == m) {
      for (const auto& [yp, yc] : ysum.terms()) {
        key[0] = yp;
        out.add(key, big_n * yc * mult);
      }
      return;
    }
    for (const auto& [p, c] : zparts[j - 1].terms()) {
      key[j] = p;
      self(self, j + 1, mult * c);
    }
  };
  rec(rec, 1, 1);
  return out;
}

CharacterSum induce_multicharacter(const MultiCharacter& mc) {
  CharacterSum out(mc.multidegree().total());
  for (const auto& [key, mult] : mc.terms()) {
    CharacterSum acc = CharacterSum::irreducible(key[0]);
    for (size_t i = 1; i < key.size(); ++i)
      acc = lr_product(acc, CharacterSum::irreducible(key[i]));
    for (const auto& [lam, c] : acc.terms()) out.add(lam, mult * c);
  }
  return out;
}

std::vector<Multidegree> multidegrees_of(int n, int m) {
  std::vector<Multidegree> out;
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == m - 1) {
      cur[i] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[i] = v;
      self(self, i + 1, rem - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

EngineResult xi_n(int m, int n) {
  EngineResult res;
  res.xi = CharacterSum(n);
  for (const Multidegree& l : multidegrees_of(n, m)) {
    if (!multidegree_in_formula_range(m, l)) continue;
    MultiCharacter mc = xi_multidegree(m, l);
    Int gl = mc.total_dimension();
    res.breakdown[l] = gl;
    res.gamma += multinomial(l.parts) * gl;
    res.xi += induce_multicharacter(mc);
  }
  return res;
}

GammaResult gamma_n(int m, int n) {
  GammaResult res;
  for (const Multidegree& l : multidegrees_of(n, m)) {
    if (!multidegree_in_formula_range(m, l)) continue;
    Int gl = xi_multidegree(m, l).total_dimension();
    res.breakdown[l] = gl;
    res.gamma += multinomial(l.parts) * gl;
  }
  return res;
}

// ---- strip lemmas ----

Int lemma42_coefficient_triple_sum(int a, int b, int c, int d) {
  Int coef = 0;
  for (int i1 = b; i1 <= a; ++i1)
    for (int i2 = c; i2 <= b; ++i2)
      for (int i3 = d; i3 <= c; ++i3) coef += i1 - i2 + 1;
  return coef;
}

Int lemma42_coefficient_closed(int a, int b, int c, int d) {
  // C = (c - d + 1) * ((a-b+1)/2 ((b+1)(a+2) + c(c-1)) + c/2 (b(b+1)-(a+1)(a+2)))
  // with the printed prefactor c when d = 1 and c + 1 when d = 0
  Rat inner = Rat(a - b + 1) / 2 * ((b + 1) * (a + 2) + c * (c - 1)) +
              Rat(c) / 2 * (b * (b + 1) - (a + 1) * (a + 2));
  Rat val = Rat(d == 1 ? c : c + 1) * inner;
  Int out;
  if (!rat_to_int(val, &out))
    throw std::logic_error("lemma42 printed coefficient not integral");
  return out;
}

StripLemmaSums strip_lemma_sum(int n, StripLemma variant) {
  if (n < 1) throw std::invalid_argument("strip_lemma_sum: n >= 1");
  StripLemmaSums out{CharacterSum(n), CharacterSum(n)};
  if (variant == StripLemma::lemma41) {
    for (int l = 1; l <= n - 1; ++l) {
      CharacterSum t = lr_product(
          CharacterSum::irreducible(Partition(std::vector<int>{l, 1})),
          CharacterSum::irreducible(Partition::row(n - l - 1)));
      out.direct += t;
    }
    for (int a = n; a >= 1; --a)
      for (int b = std::min(a, n - a); b >= 0; --b) {
        int c = n - a - b;
        if (c < 0 || c > 1 || c > b) continue;
        auto p = Partition::normalized({a, b, c});
        if (p) out.closed.add(*p, a - b + 1);
      }
  } else {
    for (int s = 0; s <= n - 2; ++s)
      for (int t = 1; t <= n - s - 1; ++t) {
        int u = n - s - t - 1;
        CharacterSum x = lr_product(
            CharacterSum::irreducible(Partition::row(s)),
            CharacterSum::irreducible(Partition(std::vector<int>{t, 1})));
        x = lr_product(x, CharacterSum::irreducible(Partition::row(u)));
        out.direct += x;
      }
    for (int a = n; a >= 1; --a)
      for (int b = std::min(a, n - a); b >= 0; --b)
        for (int c = std::min(b, n - a - b); c >= 0; --c) {
          int d = n - a - b - c;
          if (d < 0 || d > 1 || d > c) continue;
          auto p = Partition::normalized({a, b, c, d});
          if (!p) continue;
          Int coef = lemma42_coefficient_closed(a, b, c, d);
          if (coef != 0) out.closed.add(*p, coef);
        }
  }
  return out;
}

// ---- ordinary bound ----

Int ordinary_multiplicity_bound(const std::map<int, CharacterSum>& proper,
                                const Partition& lambda) {
  Int total = 0;
  int rows = lambda.length();
  std::vector<int> nu(rows, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rows) {
      std::vector<long> shape(nu.begin(), nu.end());
      auto p = Partition::normalized(shape);
      if (!p) return;  // cannot happen: interleaving keeps weak decrease
      auto it = proper.find(p->weight());
      if (it != proper.end()) total += it->second.multiplicity(*p);
      return;
    }
    int lo = lambda.part(i + 2);  // lambda_{i+1}, 0 beyond the last row
    int hi = lambda.part(i + 1);
    for (int v = lo; v <= hi; ++v) {
      nu[i] = v;
      self(self, i + 1);
    }
  };
  if (rows == 0) {
    auto it = proper.find(0);
    if (it != proper.end()) total += it->second.multiplicity(Partition());
    return total;
  }
  rec(rec, 0);
  return total;
}

// ---- dominance ----

std::string to_string(DominanceVerdict v) {
  switch (v) {
    case DominanceVerdict::LE: return "LE";
    case DominanceVerdict::GE: return "GE";
    case DominanceVerdict::EQ: return "EQ";
    case DominanceVerdict::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

DominanceResult dominance_compare(const CharacterSum& a,
                                  const CharacterSum& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("dominance_compare: degree mismatch");
  DominanceResult res;
  bool some_pos = false, some_neg = false;
  auto keys = [&] {
    std::vector<Partition> ks;
    for (const auto& [p, m] : a.terms()) ks.push_back(p);
    for (const auto& [p, m] : b.terms()) ks.push_back(p);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
  }();
  for (const Partition& p : keys) {
    Int d = b.multiplicity(p) - a.multiplicity(p);
    res.diff[p] = d;
    if (d > 0) some_pos = true;
    if (d < 0) some_neg = true;
  }
  if (!some_pos && !some_neg) res.verdict = DominanceVerdict::EQ;
  else if (!some_neg) res.verdict = DominanceVerdict::LE;
  else if (!some_pos) res.verdict = DominanceVerdict::GE;
  else res.verdict = DominanceVerdict::INCOMPARABLE;
  return res;
}

}  // namespace cocharlab
