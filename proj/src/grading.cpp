#include "cocharlab/grading.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cocharlab {

std::string MatrixUnit::to_string() const {
  return "e" + std::to_string(row) + std::to_string(col);
}

ElementaryGrading::ElementaryGrading(std::vector<int> tuple)
    : tuple_(std::move(tuple)) {
  if (tuple_.empty()) throw std::invalid_argument("empty grading tuple");
  int m = order();
  for (int& e : tuple_) {
    e %= m;
    if (e < 0) e += m;
  }
}

ElementaryGrading ElementaryGrading::phi(int m) {
  if (m < 2) throw std::invalid_argument("phi grading needs m >= 2");
  std::vector<int> t{0, 0};
  for (int v = 1; v <= m - 2; ++v) t.push_back(v);
  return ElementaryGrading(std::move(t));
}

ElementaryGrading ElementaryGrading::psi(int m) {
  if (m < 1) throw std::invalid_argument("psi grading needs m >= 1");
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = i;
  return ElementaryGrading(std::move(t));
}

int ElementaryGrading::entry(int i) const {
  if (i < 1 || i > order()) throw std::out_of_range("grading entry index");
  return tuple_[i - 1];
}

std::string ElementaryGrading::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < tuple_.size(); ++i) {
    if (i) os << ',';
    os << tuple_[i];
  }
  os << ')';
  return os.str();
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

int unit_degree(const ElementaryGrading& g, int i, int j) {
  int m = g.order();
  if (i < 1 || j < i || j > m)
    throw std::out_of_range("unit_degree: need 1 <= i <= j <= m");
  int d = (g.entry(j) - g.entry(i)) % m;
  return d < 0 ? d + m : d;
}

std::vector<MatrixUnit> component_basis(const ElementaryGrading& g, int d,
                                        bool radical_only) {
  int m = g.order();
  d %= m;
  if (d < 0) d += m;
  std::vector<MatrixUnit> out;
  for (int i = 1; i <= m; ++i)
    for (int j = radical_only ? i + 1 : i; j <= m; ++j)
      if (unit_degree(g, i, j) == d) out.push_back({i, j});
  return out;
}

namespace {

bool good_dfs(const ElementaryGrading& g, const std::vector<int>& eta,
              size_t t, int row, std::vector<MatrixUnit>& chain) {
  if (t == eta.size()) return true;
  for (const MatrixUnit& u : component_basis(g, eta[t], true)) {
    if (row != 0 && u.row != row) continue;
    chain.push_back(u);
    if (good_dfs(g, eta, t + 1, u.col, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

GoodSequenceWitness is_good_sequence(const ElementaryGrading& g,
                                     const DegreeSequence& eta) {
  GoodSequenceWitness w;
  if (eta.length() == 0) throw std::invalid_argument("empty degree sequence");
  w.good = good_dfs(g, eta.entries, 0, 0, w.chain);
  if (!w.good) w.chain.clear();
  return w;
}

bool phi_good_criterion(int m, const DegreeSequence& alpha) {
  std::vector<int> mu(m, 0);
  for (int a : alpha.entries) {
    int r = a % m;
    if (r < 0) r += m;
    ++mu[r];
  }
  if (mu[0] != 0) return false;
  long weighted = 0;
  for (int j = 1; j < m; ++j) weighted += static_cast<long>(mu[j]) * j;
  return weighted <= m - 2;
}

std::vector<DegreeSequence> bad_sequences(const ElementaryGrading& g,
                                          int max_len) {
  int m = g.order();
  std::vector<DegreeSequence> bad;
  auto contains_factor = [&](const std::vector<int>& eta) {
    for (const DegreeSequence& b : bad) {
      size_t lb = b.entries.size();
      if (lb > eta.size()) continue;
      for (size_t st = 0; st + lb <= eta.size(); ++st) {
        if (std::equal(b.entries.begin(), b.entries.end(), eta.begin() + st))
          return true;
      }
    }
    return false;
  };
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> eta(len, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == len) {
        if (!contains_factor(eta) &&
            !is_good_sequence(g, DegreeSequence(eta)).good)
          bad.emplace_back(eta);
        return;
      }
      for (int d = 0; d < m; ++d) {
        eta[pos] = d;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  return bad;
}

std::string render_generator(const DegreeSequence& eta) {
  // fresh variables per slot: y's pairwise in commutators for degree 0,
  // single letters z/t/r for degrees 1/2/3, x<d>_<k> beyond
  std::ostringstream os;
  int ycount = 0;
  std::map<int, int> counts;
  for (size_t i = 0; i < eta.entries.size(); ++i) {
    if (i) os << '*';
    int d = eta.entries[i];
    if (d == 0) {
      os << "[y" << ycount + 1 << ",y" << ycount + 2 << "]";
      ycount += 2;
    } else {
      int k = ++counts[d];
      static const char* letters[] = {"", "z", "t", "r"};
      if (d <= 3)
        os << letters[d] << k;
      else
        os << "x" << d << "_" << k;
    }
  }
  return os.str();
}

std::vector<TIdealGenerator> t_ideal_generators(const ElementaryGrading& g) {
  std::vector<TIdealGenerator> out;
  for (const DegreeSequence& eta : bad_sequences(g, g.order()))
    out.push_back({eta, render_generator(eta)});
  return out;
}

}  // namespace cocharlab
