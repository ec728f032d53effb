#include <catch_amalgamated.hpp>

#include "orbibraid/coherence.hpp"
#include "orbibraid/dsl.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/normalize.hpp"
#include "support/corpus.hpp"
#include "support/random_mor.hpp"

using namespace orbibraid;

namespace {

  CylBraidWord cw(std::string const& s, int n) {
    return CylBraidWord::parse(s, n);
  }

}  // namespace

TEST_CASE("extract examples", "[extract]") {
  auto s = extract_braid(parse_mor("sigma(X1, X2)"));
  REQUIRE(std::holds_alternative<BraidWord>(s));
  CHECK(std::get<BraidWord>(s).to_string() == "s1");
  CHECK(std::get<BraidWord>(s).strand_count() == 2);

  auto ss = extract_braid(parse_mor("tens(sigma(X1, X2), sigma(X3, X4))"));
  CHECK(std::get<BraidWord>(ss).to_string() == "s1 s3");
  CHECK(std::get<BraidWord>(ss).strand_count() == 4);
  auto hs = extract_braid(
      parse_mor("horiz(id(tensor(tensor(X2, X1), tensor(X4, X3))); "
                "sigma(X1, X2), sigma(X3, X4))"));
  CHECK(std::get<BraidWord>(hs).to_string() == "s1 s3");

  // kappa on a doubled strand, against its BP2 expansion
  auto k  = parse_mor("kappa(M, tensor(X1, X2))");
  auto kw = extract_braid(k);
  REQUIRE(std::holds_alternative<CylBraidWord>(kw));
  auto raw = std::get<CylBraidWord>(kw);
  CHECK(cyl_braid_eq(raw, cw("k s1 k", 2)));
  CHECK(cyl_braid_eq(raw, underlying_braid(normalize_presentation(k))));
  CHECK_FALSE(cyl_braid_eq(raw, cw("k k", 2)));

  CHECK(underlying_braid(parse_mor("kappa(M, X1)")).to_string() == "k");
  CHECK(underlying_braid(parse_mor("inv(kappa(M, X1))")).to_string() == "K");
  CHECK(underlying_braid(parse_mor("alpha(X1, X2, X3)")).letters().empty());
  CHECK(underlying_braid(parse_mor("phi(sigma(X1, X2))")).to_string() == "s1");
  CHECK(underlying_braid(parse_mor("phi(tens(sigma(X1, X2), id(X3)))")).to_string()
        == "s2");
  CHECK(underlying_braid(parse_mor("sigma(tensor(X1, X2), X3)")).to_string()
        == "s2 s1");
  CHECK(underlying_braid(parse_mor("kappa(act(M, X1), X2)")).to_string()
        == "s1 k s1");
}

TEST_CASE("vert and inverse extracts", "[extract][random]") {
  auto            g = testing::rng(21);
  testing::MorGen gen(g);
  for (int i = 0; i < 200; ++i) {
    auto f = gen.random(testing::uniform(g, 0, 5), i % 2 == 0);
    auto h = gen.from(f.codomain(), 3);
    auto w = underlying_braid(MorExpr::vert(h, f));
    CHECK(cyl_braid_eq(w, underlying_braid(f) * underlying_braid(h)));
    CHECK(cyl_braid_eq(underlying_braid(MorExpr::inv(f)),
                       underlying_braid(f).inverse()));
  }
}

TEST_CASE("check examples", "[check]") {
  auto sq = parse_mor("vert(sigma(X2, X1), sigma(X1, X2))");
  auto id = parse_mor("id(tensor(X1, X2))");
  CHECK(check(sq, id, Flavor::braided).status == Status::not_commutes);
  CHECK(check(sq, id, Flavor::symmetric).status == Status::commutes);
  CHECK_THROWS_AS(check(sq, id, Flavor::monoidal), FlavorError);

  auto v = check(sq, id, Flavor::braided);
  REQUIRE(v.lhs_nf);
  CHECK_FALSE(v.lhs_nf->is_trivial());
  CHECK(v.rhs_nf->is_trivial());
  auto j = v.to_json();
  CHECK(j["status"] == "NOT_COMMUTES");
  CHECK(j["flavor"] == "braided");

  auto np = check(parse_mor("sigma(X1, X2)"), id, Flavor::braided);
  CHECK(np.status == Status::not_parallel);
  CHECK(np.to_json().contains("signatures"));

  // pole windings matter to the symmetric check
  auto k1 = parse_mor("vert(act(id(M), t(X1)), kappa(M, Phi(X1)), kappa(M, X1))");
  auto k2 = parse_mor("vert(kappa(M, Phi(X1)), kappa(M, X1))");
  auto i1 = parse_mor("id(act(M, X1))");
  CHECK(check(k1, i1, Flavor::symmetric).status == Status::commutes);
  CHECK(check(k1, i1, Flavor::braided).status == Status::not_commutes);
  // Phi(Phi(X1)) and X1 share a signature
  CHECK(check(k2, i1, Flavor::symmetric).status == Status::commutes);
  CHECK(check(k2, i1, Flavor::braided).status == Status::not_commutes);
}

TEST_CASE("regression corpus", "[check][corpus]") {
  for (auto const& e : testing::corpus()) {
    INFO(e.file);
    auto d = load_diagram(testing::diagram_path(e.file));
    auto v = check(d);
    CHECK(v.status == e.expected);
    // braided commuting implies symmetric commuting
    if (d.flavor != Flavor::monoidal
        && check(d.lhs, d.rhs, Flavor::braided).status == Status::commutes) {
      CHECK(check(d.lhs, d.rhs, Flavor::symmetric).status == Status::commutes);
    }
    auto again = parse_diagram(to_string(d));
    CHECK(again.lhs == d.lhs);
    CHECK(again.rhs == d.rhs);
    CHECK(again.flavor == d.flavor);
  }
}

TEST_CASE("signed paths", "[path]") {
  auto s1 = SignedOp::parse("op Dstar [Dstar,D] eps=0 perm=1");
  CHECK(braid_of_signed_path(s1, cw("k", 1)).to_string()
        == "op Dstar [Dstar,D] eps=1 perm=1");
  CHECK(braid_of_signed_path(s1, cw("k K", 1)) == s1);
  CHECK(braid_of_signed_path(s1, cw("", 1)) == s1);
  auto s2 = SignedOp::parse("op D [D,D] eps=00 perm=12");
  CHECK(braid_of_signed_path(s2, BraidWord::parse("s1", 2)).to_string()
        == "op D [D,D] eps=00 perm=21");
  CHECK(braid_of_signed_path(s2, BraidWord::parse("", 2)) == s2);
  CHECK_THROWS_AS(braid_of_signed_path(s2, BraidWord::parse("s1", 3)), ArityError);
  CHECK_THROWS_AS(braid_of_signed_path(s2, cw("k", 2)), TypingError);
  auto s3 = SignedOp::parse("op Dstar [Dstar,D,D] eps=00 perm=12");
  CHECK(braid_of_signed_path(s3, cw("s1 k", 2)).to_string()
        == "op Dstar [Dstar,D,D] eps=01 perm=21");
}

TEST_CASE("endpoint consistency on random terms", "[path][random]") {
  auto            g = testing::rng(22);
  testing::MorGen gen(g);
  for (int i = 0; i < 500; ++i) {
    auto f = gen.random(testing::uniform(g, 0, 6), i % 3 != 0);
    REQUIRE(endpoint_consistent(f));
  }
  // a retyping that lies about eps is caught
  CHECK(endpoint_consistent(parse_mor("kappa(M, tensor(X1, X2))")));
}
