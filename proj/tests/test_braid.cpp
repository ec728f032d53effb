#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "orbibraid/braid.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/garside.hpp"
#include "orbibraid/lawrence_krammer.hpp"
#include "support/random_words.hpp"

using namespace orbibraid;

namespace {
  BraidWord w(int n, char const* s) {
    return BraidWord::parse(s, n);
  }
  CylBraidWord c(int n, char const* s) {
    return CylBraidWord::parse(s, n);
  }

  // All positive words reachable from `start` by the positive braid relations.
  std::set<std::vector<int>> positive_class(std::vector<int> start, int n) {
    std::set<std::vector<int>>    seen{start};
    std::vector<std::vector<int>> todo{start};
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (std::abs(x[i] - x[i + 1]) > 1) {
          auto y = x;
          std::swap(y[i], y[i + 1]);
          if (seen.insert(y).second) {
            todo.push_back(y);
          }
        }
        if (i + 2 < x.size() && x[i] == x[i + 2] && std::abs(x[i] - x[i + 1]) == 1) {
          auto y = x;
          y[i] = y[i + 2] = x[i + 1];
          y[i + 1]        = x[i];
          if (seen.insert(y).second) {
            todo.push_back(y);
          }
        }
      }
    }
    (void) n;
    return seen;
  }
}  // namespace

TEST_CASE("word parsing and printing", "[braid]") {
  CHECK(w(3, "s1 S2").to_string() == "s1 S2");
  CHECK(w(3, "").empty());
  CHECK(w(3, "1").empty());
  CHECK(c(2, "k s1 K s1").to_string() == "k s1 K s1");
  CHECK_THROWS_AS(w(3, "s3"), MalformedWordError);
  CHECK_THROWS_AS(w(3, "s0"), MalformedWordError);
  CHECK_THROWS_AS(w(3, "x1"), MalformedWordError);
  CHECK_THROWS_AS(w(3, "k"), MalformedWordError);
  CHECK_THROWS_AS(w(2, "s1") * w(3, "s1"), ArityError);
}

TEST_CASE("underlying permutation", "[braid]") {
  CHECK(w(3, "s1 s2").permutation().to_string() == "312");
  CHECK(w(3, "s1 s2 s1").permutation().to_string() == "321");
  CHECK(w(2, "s1 S1").permutation().is_identity());
}

TEST_CASE("garside_nf examples", "[garside]") {
  auto nf = garside_nf(w(2, "s1 S1"));
  CHECK(nf.infimum == 0);
  CHECK(nf.factors.empty());

  nf = garside_nf(w(3, "s1 s2 s1"));
  CHECK(nf.infimum == 1);
  CHECK(nf.factors.empty());
  // positive rewriting class of s1 s2 s1 contains the half-twist word s2 s1 s2
  auto cls = positive_class({1, 2, 1}, 3);
  CHECK(cls.count({2, 1, 2}) == 1);
  CHECK(cls.size() == 2);

  nf = garside_nf(w(3, "S1"));
  CHECK(nf.infimum == -1);
  REQUIRE(nf.factors.size() == 1);
  CHECK(nf.factors[0] == w(3, "s1 s2").permutation());
  CHECK(nf.to_string() == "p=-1 factors=[312]");
  // Delta * s1^-1 == s1 s2, checked with the representation
  CHECK(lk_matrix(w(3, "s1 s2 s1 S1")) == lk_matrix(w(3, "s1 s2")));

  CHECK_THROWS_AS(garside_nf(BraidWord(3, {{3, 1}})), MalformedWordError);
}

TEST_CASE("garside factors are left-weighted and proper", "[garside]") {
  auto g = testing::rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    int  n  = testing::uniform(g, 2, 6);
    auto x  = testing::random_word(g, n, testing::uniform(g, 0, 20));
    auto nf = garside_nf(x);
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
      auto const& f = nf.factors[k];
      CHECK_FALSE(f.is_identity());
      std::vector<int> rev(n);
      for (int i = 0; i < n; ++i) {
        rev[i] = n - 1 - i;
      }
      CHECK(f.images() != rev);
      if (k + 1 < nf.factors.size()) {
        auto finv = f.inverse();
        auto b    = nf.factors[k + 1];
        for (int i = 0; i + 1 < n; ++i) {
          if (b[i] > b[i + 1]) {
            CHECK(finv[i] > finv[i + 1]);
          }
        }
      }
    }
    CHECK(garside_nf(to_word(nf)) == nf);
    CHECK(lk_matrix(to_word(nf)) == lk_matrix(x));
  }
}

TEST_CASE("braid_eq examples", "[garside]") {
  CHECK(braid_eq(w(3, "s1 s2 s1"), w(3, "s2 s1 s2")));
  CHECK(braid_eq(w(4, "s1 s3"), w(4, "s3 s1")));
  CHECK_FALSE(braid_eq(w(2, "s1 s1"), w(2, "")));
  CHECK_FALSE(lk_matrix(w(2, "s1 s1")).is_identity());
  CHECK_THROWS_AS(braid_eq(w(2, ""), w(3, "")), ArityError);
  CHECK_FALSE(braid_eq(w(3, "s1 s2"), w(3, "s2 s1")));
}

TEST_CASE("u u^-1 is trivial", "[garside]") {
  auto g = testing::rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int  n = testing::uniform(g, 2, 6);
    auto u = testing::random_word(g, n, 15);
    CHECK(braid_eq(u * u.inverse(), w(n, "")));
  }
}

TEST_CASE("embed_cyl examples", "[cyl]") {
  CHECK(embed_cyl(c(1, "k")) == w(2, "s1 s1"));
  CHECK(embed_cyl(c(2, "k s1 k s1")) == w(3, "s1 s1 s2 s1 s1 s2"));
  CHECK(embed_cyl(c(2, "")) == w(3, ""));
  CHECK(embed_cyl(c(2, "K S1")) == w(3, "S1 S1 S2"));
}

TEST_CASE("cyl_braid_eq examples", "[cyl]") {
  CHECK(cyl_braid_eq(c(2, "k s1 k s1"), c(2, "s1 k s1 k")));
  CHECK(cyl_braid_eq(c(3, "s2 k"), c(3, "k s2")));
  CHECK_FALSE(cyl_braid_eq(c(1, "k"), c(1, "K")));
  auto nk  = cyl_garside_nf(c(1, "k"));
  auto nki = cyl_garside_nf(c(1, "K"));
  CHECK(nk.infimum == 2);
  CHECK(nki.infimum == -2);
  CHECK_FALSE(cyl_braid_eq(c(2, "k s1"), c(2, "s1 k")));
}

TEST_CASE("pole_winding examples", "[cyl]") {
  CHECK(pole_winding(c(1, "k"), 1) == 1);
  CHECK(pole_winding(c(2, "s1 k s1"), 1) == 0);
  CHECK(pole_winding(c(2, "s1 k s1"), 2) == 1);
  CHECK(pole_winding(c(1, "k K"), 1) == 0);
  CHECK_THROWS_AS(pole_winding(c(1, "k"), 2), PreconditionError);
}

TEST_CASE("pole_winding is additive along concatenation", "[cyl]") {
  auto g = testing::rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int  n  = testing::uniform(g, 1, 5);
    auto u  = testing::random_cyl_word(g, n, 10);
    auto v  = testing::random_cyl_word(g, n, 10);
    auto wu = pole_windings(u);
    auto wv = pole_windings(v);
    auto wc = pole_windings(u * v);
    auto p  = u.permutation();
    for (int s = 0; s < n; ++s) {
      CHECK(wc[s] == wu[s] + wv[p[s]]);
    }
  }
}

TEST_CASE("Lawrence-Krammer generators satisfy the braid relations", "[lk]") {
  CHECK(lk_matrix(w(3, "")).is_identity());
  CHECK(lk_matrix(w(3, "")).dim() == 3);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      auto gi = lk_generator(n, i, 1);
      CHECK((gi * lk_generator(n, i, -1)).is_identity());
      for (int j = i + 1; j < n; ++j) {
        auto gj = lk_generator(n, j, 1);
        if (j == i + 1) {
          CHECK(gi * gj * gi == gj * gi * gj);
        } else {
          CHECK(gi * gj == gj * gi);
        }
      }
    }
  }
  CHECK(lk_matrix(w(3, "s1 s2 s1")) == lk_matrix(w(3, "s2 s1 s2")));
  CHECK(lk_matrix(w(2, "s1 s1")).at(0, 0) == Poly2(1, 4, 2));
}

TEST_CASE("Garside and Lawrence-Krammer agree", "[lk]") {
  auto g = testing::rng(4);
  int  equal_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int  n = testing::uniform(g, 2, 5);
    auto u = testing::random_word(g, n, testing::uniform(g, 0, 12));
    BraidWord v(n);
    if (trial % 2 == 0) {
      v = u;
      for (int k = 0; k < 3; ++k) {
        v = testing::rewrite_once(g, v);
      }
    } else {
      v = testing::random_word(g, n, testing::uniform(g, 0, 12));
    }
    bool a = braid_eq(u, v);
    bool b = lk_matrix(u) == lk_matrix(v);
    CHECK(a == b);
    equal_pairs += a;
  }
  CHECK(equal_pairs >= 100);
}
