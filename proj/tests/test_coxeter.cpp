#include <algorithm>
#include <set>

#include "doctest.h"
#include "klv/coxeter.hpp"

using namespace klv;

TEST_CASE("named types produce the catalogue matrices") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.matrix()(0, 1) == 3);
  CHECK(a2.twist().is_identity());

  auto ta2 = CoxeterSystem::from_type("2A2");
  CHECK(ta2.matrix()(0, 1) == 3);
  CHECK(ta2.twist()(0) == 1);
  CHECK(ta2.twist()(1) == 0);

  auto i27 = CoxeterSystem::from_type("I2(7)");
  CHECK(i27.matrix()(0, 1) == 7);

  auto f4 = CoxeterSystem::from_type("2F4");
  CHECK(f4.matrix()(1, 2) == 4);
  CHECK(f4.twist()(0) == 3);
}

TEST_CASE("group orders") {
  CHECK(CoxeterSystem::from_type("A1").size() == 2);
  CHECK(CoxeterSystem::from_type("A2").size() == 6);
  CHECK(CoxeterSystem::from_type("A3").size() == 24);
  CHECK(CoxeterSystem::from_type("BC3").size() == 48);
  CHECK(CoxeterSystem::from_type("D4").size() == 192);
  CHECK(CoxeterSystem::from_type("G2").size() == 12);
  CHECK(CoxeterSystem::from_type("H3").size() == 120);
  CHECK(CoxeterSystem::from_type("I2(9)").size() == 18);
  CHECK(CoxeterSystem::from_type("A1xA1").size() == 4);
  CHECK(CoxeterSystem::from_type("A1xA2").size() == 12);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(CoxeterSystem::from_type("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_type("A2", "3,1"),
                  std::invalid_argument);
  BuildOptions small;
  small.element_cap = 10;
  CHECK_THROWS_AS(CoxeterSystem::from_type("A3", "", small), CapExceededError);
  CoxeterMatrix bad{2, {1, 3, 4, 1}};
  CHECK_THROWS_AS(
      CoxeterSystem::from_matrix("bad", bad, Twist::identity(2), {}),
      std::invalid_argument);
}

TEST_CASE("canonical order and words") {
  auto sys = CoxeterSystem::from_type("A2");
  CHECK(sys.length(0) == 0);
  CHECK(sys.word(0).empty());
  // index order is (length, ShortLex)
  for (int w = 1; w < sys.size(); ++w)
    CHECK(std::make_pair(sys.length(w - 1), sys.word(w - 1)) <
          std::make_pair(sys.length(w), sys.word(w)));
  auto w0 = sys.longest_element();
  CHECK(sys.length(w0) == 3);
  CHECK(sys.word(w0) == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(CoxeterSystem::from_type("I2(5)").length(
            CoxeterSystem::from_type("I2(5)").longest_element()) == 5);
}

TEST_CASE("descents") {
  auto sys = CoxeterSystem::from_type("A3");
  for (int w = 0; w < sys.size(); ++w)
    for (int s = 0; s < sys.rank(); ++s) {
      bool d = sys.length(sys.left_mult(s, w)) < sys.length(w);
      CHECK(sys.left_desc(s, w) == d);
      CHECK(((sys.left_desc_set(w) >> s) & 1u) == (d ? 1u : 0u));
    }
}

TEST_CASE("bruhat order") {
  auto sys = CoxeterSystem::from_type("BC3");
  for (int w = 0; w < sys.size(); ++w) {
    CHECK(sys.bruhat_leq(w, w));
    CHECK(sys.bruhat_leq(0, w));
  }
  // dihedral: y <= w iff l(y) < l(w) or y = w
  auto d = CoxeterSystem::from_type("I2(6)");
  for (int y = 0; y < d.size(); ++y)
    for (int w = 0; w < d.size(); ++w)
      CHECK(d.bruhat_leq(y, w) == (y == w || d.length(y) < d.length(w)));
  // against the brute-force subword criterion
  for (const char* lbl : {"A3", "BC3", "I2(7)", "A1xA2"}) {
    auto s = CoxeterSystem::from_type(lbl);
    for (int y = 0; y < s.size(); ++y)
      for (int w = 0; w < s.size(); ++w)
        CHECK(s.bruhat_leq(y, w) == bruhat_leq_subword(s, y, w));
  }
}

TEST_CASE("star action") {
  auto sys = CoxeterSystem::from_type("2A2");
  CHECK(sys.star(sys.generator(0)) == sys.generator(1));
  for (const char* lbl : {"2A3", "2D4", "A3", "2I2(8)"}) {
    auto s = CoxeterSystem::from_type(lbl);
    for (int w = 0; w < s.size(); ++w) {
      CHECK(s.star(s.star(w)) == w);
      CHECK(s.length(s.star(w)) == s.length(w));
    }
    for (int u = 0; u < s.size(); u += 7)
      for (int v = 0; v < s.size(); v += 5)
        CHECK(s.star(s.multiply(u, v)) == s.multiply(s.star(u), s.star(v)));
  }
}

TEST_CASE("twisted involutions") {
  // trivial twist: identity, w0 and all odd-length elements
  auto d = CoxeterSystem::from_type("I2(5)");
  std::set<int> tw(d.twisted_involutions().begin(),
                   d.twisted_involutions().end());
  for (int w = 0; w < d.size(); ++w) {
    bool expect = w == 0 || w == d.longest_element() || d.length(w) % 2 == 1;
    CHECK(tw.count(w) == (expect ? 1u : 0u));
  }
  // nontrivial twist: w0 and all even-length elements
  auto dt = CoxeterSystem::from_type("2I2(5)");
  std::set<int> twt(dt.twisted_involutions().begin(),
                    dt.twisted_involutions().end());
  for (int w = 0; w < dt.size(); ++w) {
    bool expect = w == dt.longest_element() || dt.length(w) % 2 == 0;
    CHECK(twt.count(w) == (expect ? 1u : 0u));
  }
  // S4 has 10 involutions counting the identity
  CHECK(CoxeterSystem::from_type("A3").twisted_involutions().size() == 10);
  CHECK(CoxeterSystem::from_type("A1xA1", "swap").twisted_involutions().size()
        == 2);
  // membership matches the defining condition
  auto s = CoxeterSystem::from_type("2A3");
  for (int w = 0; w < s.size(); ++w)
    CHECK(s.is_twisted_involution(w) == (s.star(w) == s.inverse(w)));
}

TEST_CASE("ltimes") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(a2.ltimes(0, 0) == a2.generator(0));
  CHECK(a2.ltimes(0, a2.generator(0)) == 0);
  // s1 |x s2 = s1 s2 s1 since s1 s2 s1 != s2
  int s2 = a2.generator(1);
  CHECK(a2.length(a2.ltimes(0, s2)) == 3);
  for (const char* lbl : {"A3", "2A3", "BC3", "2I2(6)"}) {
    auto s = CoxeterSystem::from_type(lbl);
    for (int w : s.twisted_involutions())
      for (int g = 0; g < s.rank(); ++g) {
        int u = s.ltimes(g, w);
        CHECK(s.is_twisted_involution(u));
        CHECK(u != w);
        CHECK(s.ltimes(g, u) == w);
        int dl = s.length(u) - s.length(w);
        CHECK((dl == 1 || dl == -1 || dl == 2 || dl == -2));
        bool conj = s.multiply(s.multiply(s.generator(g), w),
                               s.generator(s.twist()(g))) != w;
        CHECK((std::abs(dl) == 2) == conj);
      }
  }
}

TEST_CASE("product blocks") {
  auto sys = CoxeterSystem::from_type("A1xA2");
  REQUIRE(sys.blocks().size() == 2);
  CHECK(sys.blocks()[0] == std::pair<int, int>{0, 1});
  CHECK(sys.blocks()[1] == std::pair<int, int>{1, 3});
  // generators from different blocks commute
  CHECK(sys.multiply(sys.generator(0), sys.generator(1)) ==
        sys.multiply(sys.generator(1), sys.generator(0)));
}
