#include <doctest.h>

#include "cocharlab/grading.hpp"
#include "cocharlab/oracle.hpp"

using namespace cocharlab;

namespace {
DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }
}  // namespace

TEST_CASE("named gradings expand to the right tuples") {
  CHECK(ElementaryGrading::phi(3).tuple() == std::vector<int>{0, 0, 1});
  CHECK(ElementaryGrading::phi(5).tuple() == std::vector<int>{0, 0, 1, 2, 3});
  CHECK(ElementaryGrading::psi(4).tuple() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("unit_degree under the adopted orientation") {
  CHECK(unit_degree(ElementaryGrading::phi(3), 1, 3) == 1);
  CHECK(unit_degree(ElementaryGrading::phi(4), 1, 2) == 0);
  CHECK(unit_degree(ElementaryGrading::psi(3), 2, 3) == 1);
  CHECK_THROWS_AS(unit_degree(ElementaryGrading::phi(3), 3, 1),
                  std::out_of_range);
}

TEST_CASE("component_basis") {
  auto g3 = ElementaryGrading::phi(3);
  auto deg1 = component_basis(g3, 1, true);
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0] == MatrixUnit{1, 3});
  CHECK(deg1[1] == MatrixUnit{2, 3});
  CHECK(component_basis(g3, 2, true).empty());
  CHECK(component_basis(g3, 2).empty());

  auto g4 = ElementaryGrading::phi(4);
  auto deg0 = component_basis(g4, 0);
  REQUIRE(deg0.size() == 5);
  CHECK(deg0[0] == MatrixUnit{1, 1});
  CHECK(deg0[1] == MatrixUnit{1, 2});
  CHECK(deg0[2] == MatrixUnit{2, 2});
  CHECK(deg0[3] == MatrixUnit{3, 3});
  CHECK(deg0[4] == MatrixUnit{4, 4});
  auto rad0 = component_basis(g4, 0, true);
  REQUIRE(rad0.size() == 1);
  CHECK(rad0[0] == MatrixUnit{1, 2});
}

TEST_CASE("is_good_sequence with witnesses") {
  auto g3 = ElementaryGrading::phi(3);
  auto w1 = is_good_sequence(g3, seq({1}));
  CHECK(w1.good);
  REQUIRE(w1.chain.size() == 1);
  CHECK(w1.chain[0] == MatrixUnit{1, 3});

  CHECK_FALSE(is_good_sequence(g3, seq({1, 1})).good);

  auto w01 = is_good_sequence(g3, seq({0, 1}));
  CHECK(w01.good);
  REQUIRE(w01.chain.size() == 2);
  CHECK(w01.chain[0] == MatrixUnit{1, 2});
  CHECK(w01.chain[1] == MatrixUnit{2, 3});

  // the reversed order is bad under the adopted orientation
  CHECK_FALSE(is_good_sequence(g3, seq({1, 0})).good);
}

TEST_CASE("witness chains multiply to a nonzero unit with matching degrees") {
  for (int m : {3, 4, 5}) {
    auto g = ElementaryGrading::phi(m);
    for (int len = 1; len <= m; ++len) {
      std::vector<int> eta(len, 0);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
          auto w = is_good_sequence(g, seq(eta));
          if (!w.good) return;
          REQUIRE(w.chain.size() == eta.size());
          for (size_t t = 0; t < w.chain.size(); ++t) {
            CHECK(w.chain[t].row < w.chain[t].col);
            CHECK(unit_degree(g, w.chain[t].row, w.chain[t].col) == eta[t]);
            if (t + 1 < w.chain.size())
              CHECK(w.chain[t].col == w.chain[t + 1].row);
          }
          return;
        }
        for (int d = 0; d < m; ++d) {
          eta[pos] = d;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  }
}

TEST_CASE("phi criterion cases from the proofs") {
  CHECK(phi_good_criterion(4, seq({1, 1})));
  CHECK_FALSE(phi_good_criterion(4, seq({1, 2})));
  CHECK(phi_good_criterion(5, seq({1, 1, 1})));
}

TEST_CASE("criterion equals the chain search on zero-free sequences") {
  for (int m = 3; m <= 6; ++m) {
    auto g = ElementaryGrading::phi(m);
    for (int len = 1; len <= m; ++len) {
      std::vector<int> alpha(len, 1);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
          CHECK(phi_good_criterion(m, seq(alpha)) ==
                is_good_sequence(g, seq(alpha)).good);
          return;
        }
        for (int d = 1; d < m; ++d) {
          alpha[pos] = d;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  }
}

TEST_CASE("minimal bad sequences for phi") {
  auto bad3 = bad_sequences(ElementaryGrading::phi(3), 3);
  std::vector<DegreeSequence> expect3{seq({2}), seq({0, 0}), seq({1, 0}),
                                      seq({1, 1})};
  CHECK(bad3 == expect3);

  auto bad4 = bad_sequences(ElementaryGrading::phi(4), 4);
  std::vector<DegreeSequence> expect4{seq({3}),    seq({0, 0}), seq({1, 0}),
                                      seq({1, 2}), seq({2, 0}), seq({2, 1}),
                                      seq({2, 2}), seq({1, 1, 1})};
  CHECK(bad4 == expect4);

  auto bad5 = bad_sequences(ElementaryGrading::phi(5), 5);
  std::vector<DegreeSequence> expect5{
      seq({4}),       seq({0, 0}),    seq({1, 0}),    seq({1, 3}),
      seq({2, 0}),    seq({2, 2}),    seq({2, 3}),    seq({3, 0}),
      seq({3, 1}),    seq({3, 2}),    seq({3, 3}),    seq({1, 1, 2}),
      seq({1, 2, 1}), seq({2, 1, 1}), seq({2, 1, 2}), seq({1, 1, 1, 1})};
  CHECK(bad5 == expect5);
}

TEST_CASE("every produced sequence is bad; factor-free sequences are good") {
  for (int m : {3, 4, 5}) {
    auto g = ElementaryGrading::phi(m);
    auto bad = bad_sequences(g, m);
    for (const DegreeSequence& eta : bad)
      CHECK_FALSE(is_good_sequence(g, eta).good);
    // exhaustively: a sequence of length <= m containing no bad factor is good
    for (int len = 1; len <= m; ++len) {
      std::vector<int> eta(len, 0);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
          bool has_factor = false;
          for (const DegreeSequence& b : bad) {
            size_t lb = b.entries.size();
            if (lb > eta.size()) continue;
            for (size_t st = 0; st + lb <= eta.size() && !has_factor; ++st)
              has_factor = std::equal(b.entries.begin(), b.entries.end(),
                                      eta.begin() + st);
            if (has_factor) break;
          }
          CHECK(is_good_sequence(g, seq(eta)).good == !has_factor);
          return;
        }
        for (int d = 0; d < m; ++d) {
          eta[pos] = d;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  }
}

TEST_CASE("generator rendering") {
  CHECK(render_generator(seq({1, 1})) == "z1*z2");
  CHECK(render_generator(seq({0, 0})) == "[y1,y2]*[y3,y4]");
  CHECK(render_generator(seq({1, 0})) == "z1*[y1,y2]");
  CHECK(render_generator(seq({1, 2})) == "z1*t1");
  CHECK(render_generator(seq({2, 0, 2})) == "t1*[y1,y2]*t2");
}

TEST_CASE("generators vanish identically on their algebras") {
  for (int m : {3, 4, 5}) {
    GradedMatrixAlgebra algebra(ElementaryGrading::phi(m));
    for (const TIdealGenerator& gen : t_ideal_generators(algebra.grading())) {
      auto [prod, degs] = generator_product(gen.eta);
      CHECK(is_identity_on(algebra, prod, degs));
    }
  }
}
