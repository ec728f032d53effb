#include <catch_amalgamated.hpp>

#include "orbibraid/error.hpp"
#include "orbibraid/permutation.hpp"

using namespace orbibraid;

TEST_CASE("permutation basics", "[permutation]") {
  auto p = Permutation::parse("312");
  CHECK(p.degree() == 3);
  CHECK(p[0] == 2);
  CHECK(p.to_string() == "312");
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(Permutation::parse("1,2,3") == Permutation::identity(3));
  CHECK(Permutation::transposition(3, 0, 1).to_string() == "213");
  CHECK_THROWS_AS(Permutation::parse("113"), Error);
}

TEST_CASE("then composes left to right", "[permutation]") {
  auto a = Permutation::parse("231");
  auto b = Permutation::parse("213");
  auto c = a.then(b);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(c[i] == b[a[i]]);
  }
}

TEST_CASE("all_permutations", "[permutation]") {
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(4).size() == 24);
  auto ten = Permutation::identity(10);
  CHECK(Permutation::parse(ten.to_string()) == ten);
}
