#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocharlab/character.hpp"
#include "cocharlab/partition.hpp"

namespace cocharlab {

// (l_1,...,l_m): l_1 counts degree-0 variables, l_j counts degree-(j-1) ones.
using Multidegree = Composition;

// True iff sum_{j>=2} l_j (j-1) <= m-2, the hypothesis under which the
// multidegree formula applies; outside it the proper character vanishes.
bool multidegree_in_formula_range(int m, const Multidegree& l);

// All length-m compositions of n, lexicographically.
std::vector<Multidegree> multidegrees_of(int n, int m);

// The combinatorial formula for xi_{l_1,...,l_m} of (UT_m, phi):
//
//   N * sum over s_compositions(l_1, k+1) of
//       (lambda(s_1) (x) strip(s_2) (x) ... (x) strip(s_{k+1}))^{S_{l_1}}
//     (x) regular character of S_{l_2} (x) ... (x) regular of S_{l_m}
//
// where k = sum_{j>=2} l_j, N = k!/(l_2!...l_m!) counts the degree
// sequences with the given multiplicity tuple, lambda(0) is empty,
// lambda(s) = (s-1,1) for s >= 2, and s_1 = 1 never occurs. Throws
// NotGoodMultidegree outside the formula range.
MultiCharacter xi_multidegree(int m, const Multidegree& l);

// Fold of lr_product across each key tuple: the induction to S_n.
CharacterSum induce_multicharacter(const MultiCharacter& mc);

struct EngineResult {
  CharacterSum xi;
  Int gamma = 0;
  std::map<Multidegree, Int> breakdown;  // l -> gamma_l, in-range l only
};

// Sum over all multidegrees of n inside the formula range, induced to S_n;
// gamma aggregates with multinomial weights.
EngineResult xi_n(int m, int n);

struct GammaResult {
  Int gamma = 0;
  std::map<Multidegree, Int> breakdown;
};

// Dimension-only version of xi_n.
GammaResult gamma_n(int m, int n);

// ---- the two strip lemmas ----

enum class StripLemma { lemma41, lemma42 };

struct StripLemmaSums {
  CharacterSum direct;  // left-hand sum, by the LR engine
  CharacterSum closed;  // right-hand side as printed, degenerate shapes dropped
};

// lemma41:  sum_{l=1}^{n-1} ((l,1) (x) (n-l-1))^{S_n}
//       vs  sum_{a+b+c=n, c<=1} (a-b+1) [(a,b,c)]
// lemma42:  sum_{s=0}^{n-2} sum_{t=1}^{n-s-1} ((s) (x) (t,1) (x) (n-s-t-1))^{S_n}
//       vs  sum_{a+b+c+d=n, d<=1} C(a,b,c,d) [(a,b,c,d)]
// Both right-hand sides run over weakly decreasing nonnegative tuples.
StripLemmaSums strip_lemma_sum(int n, StripLemma variant);

// The printed C(a,b,c,d) prefactors, exposed for the algebraic cross-check
// against the triple-sum form.
Int lemma42_coefficient_closed(int a, int b, int c, int d);
Int lemma42_coefficient_triple_sum(int a, int b, int c, int d);

// ---- ordinary-cocharacter bound ----

// Sum of k_nu over all nu interleaving lambda (lambda_1 >= nu_1 >= lambda_2
// >= nu_2 >= ...), with k data supplied per degree. Missing degrees or
// partitions count as zero.
Int ordinary_multiplicity_bound(const std::map<int, CharacterSum>& proper,
                                const Partition& lambda);

// ---- multiplicity-order comparison ----

enum class DominanceVerdict { LE, GE, EQ, INCOMPARABLE };

std::string to_string(DominanceVerdict v);

struct DominanceResult {
  DominanceVerdict verdict = DominanceVerdict::EQ;
  // per-lambda difference b - a over the union of supports
  std::map<Partition, Int> diff;
};

// Componentwise comparison of equal-degree character sums; throws
// std::invalid_argument on degree mismatch.
DominanceResult dominance_compare(const CharacterSum& a, const CharacterSum& b);

}  // namespace cocharlab
