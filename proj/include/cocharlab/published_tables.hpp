#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocharlab/character.hpp"
#include "cocharlab/grading.hpp"
#include "cocharlab/partition.hpp"

namespace cocharlab {

struct PublishedValue {
  Int value;
  std::string source;  // theorem tag, e.g. "Thm 5.1 table"
};

struct PublishedGammaForm {
  std::string label;    // "statement" or "proof"
  std::string source;   // theorem tag
  std::string printed;  // the closed form as printed
  int min_n;            // printed validity threshold
  std::function<Int(int)> eval;
};

// A multiplicity case of an m_lambda table: matches a shape family and
// evaluates the printed closed form at the matched (a, b) parameters.
struct PublishedRule {
  std::string printed;
  std::string source;
  // nullopt when lambda falls outside this case
  std::function<std::optional<std::pair<long, long>>(const Partition&)> match;
  std::function<Rat(long, long)> value;
};

struct PublishedXi {
  CharacterSum xi;
  // shapes the printed formula produced that had to be dropped as degenerate
  std::vector<std::string> normalization_notes;
};

// The published data for (UT_m, phi), m in 2..5, exactly as printed:
// gamma closed form(s) -- UT_5 stores the conflicting statement and proof
// variants side by side -- and the m_lambda tables. Nothing is corrected
// here; reconciliation happens in the discrepancy report.
class PublishedTable {
 public:
  int order() const { return m_; }
  const std::vector<PublishedGammaForm>& gamma_forms() const {
    return gamma_forms_;
  }

  // all printed gamma values at n; throws PatternNotCovered below the
  // printed validity threshold
  std::vector<PublishedValue> gamma_at(int n) const;

  // m_lambda per the printed table. For m = 2, 3 the printed decomposition
  // is total (n >= 2): unlisted shapes are zero. For m = 4, 5 the tables
  // have gaps: throws PatternNotCovered when no printed case matches.
  PublishedValue multiplicity(const Partition& lambda) const;
  bool covers(const Partition& lambda) const;

  // the full printed xi_n, normalized; degenerate drops are recorded
  PublishedXi xi_at(int n) const;

  // bad-sequence lists as printed in the Cor 3.5 proof (empty for m = 2)
  const std::vector<DegreeSequence>& printed_bad_sequences() const {
    return printed_bad_;
  }

  // sum over covered lambda |- n of m_lambda * hook dimension; the audit
  // quantity compared against the printed gamma forms
  Int covered_dimension_at(int n) const;

 private:
  friend const PublishedTable& published_table(int m);
  static PublishedTable make_ut2();
  static PublishedTable make_ut3();
  static PublishedTable make_ut4();
  static PublishedTable make_ut5();
  int m_ = 0;
  // for m = 2, 3: shapes parametric in n (evaluated per query weight)
  struct NShapeTerm {
    Int coeff;
    std::string printed;
    std::function<std::vector<long>(int)> shape_at;
  };
  std::vector<NShapeTerm> n_shape_terms_;
  std::vector<PublishedRule> rules_;
  std::vector<PublishedGammaForm> gamma_forms_;
  std::vector<DegreeSequence> printed_bad_;
  std::string table_source_;
  int min_n_ = 2;
};

// m in {2,3,4,5}; throws PatternNotCovered otherwise.
const PublishedTable& published_table(int m);

// The printed ordinary-multiplicity bounds of Examples 7.5 / 7.6 for
// lambda = (n-2,1,1): 3n-6 for UT_3 and 2n^2-5n-7 for UT_4.
PublishedValue published_example_bound(int m, int n);

}  // namespace cocharlab
