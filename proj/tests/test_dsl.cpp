#include <set>

#include <catch_amalgamated.hpp>

#include "orbibraid/coherence.hpp"
#include "orbibraid/dsl.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/normalize.hpp"
#include "support/random_mor.hpp"

using namespace orbibraid;
using O = ObjectExpr;

namespace {

  int count_gen(MorExpr const& f, GenKind k) {
    int n = 0;
    if (f.kind() == MorExpr::Kind::generator) {
      return f.generator() == k ? 1 : 0;
    }
    for (auto const& c : f.children()) {
      n += count_gen(c, k);
    }
    return n;
  }

  // every sigma and kappa instance sits on leaves Phi^k(X_i) / module leaves
  bool single_strand(MorExpr const& f) {
    auto leafish = [](O o) {
      while (o.kind() == O::Kind::phi) {
        o = o.child(0);
      }
      return o.kind() == O::Kind::generator;
    };
    if (f.kind() == MorExpr::Kind::generator) {
      if (f.generator() == GenKind::sigma) {
        return leafish(f.params()[0]) && leafish(f.params()[1]);
      }
      if (f.generator() == GenKind::kappa) {
        auto p = f.params()[0];
        return (p.kind() == O::Kind::module || p.kind() == O::Kind::module_unit)
               && leafish(f.params()[1]);
      }
      return true;
    }
    for (auto const& c : f.children()) {
      if (!single_strand(c)) {
        return false;
      }
    }
    return true;
  }

  MorExpr d_of(MorExpr const& f) {
    return f.desugared();
  }

  std::string sig(std::string const& obj) {
    return signature(parse_object(obj)).to_string();
  }

}  // namespace

TEST_CASE("parse single generators", "[dsl]") {
  auto s = parse_mor("sigma(X1, X2)");
  REQUIRE(s.kind() == MorExpr::Kind::generator);
  CHECK(s.generator() == GenKind::sigma);
  CHECK(s.domain() == O::tensor(O::gen(1), O::gen(2)));
  CHECK(s.codomain() == O::tensor(O::gen(2), O::gen(1)));

  // parses; the seam is only checked when the domain is asked for
  auto v = parse_mor("vert(kappa(M, X1), a(M, X1, X2))");
  CHECK(v.kind() == MorExpr::Kind::vert);
  CHECK_FALSE(v.well_typed());
  CHECK_THROWS_AS(v.domain(), TypingError);
  CHECK_THROWS_AS(underlying_braid(v), TypingError);
  CHECK(v.to_string() == "vert(kappa(M, X1), a(M, X1, X2))");

  auto w = parse_mor("vert(kappa(M, tensor(X1, X2)), a(M, X1, X2))");
  CHECK(w.well_typed());
  CHECK(w.domain().to_string() == "act(act(M, X1), X2)");
  CHECK(w.codomain().to_string() == "act(M, Phi(tensor(X1, X2)))");
}

TEST_CASE("phi2 domain and codomain", "[dsl]") {
  auto f = parse_mor("phi2(X1; X2)");
  CHECK(f.domain() == O::tensor(O::phi(O::gen(1)), O::phi(O::gen(2))));
  CHECK(f.codomain() == O::phi(O::tensor(O::gen(2), O::gen(1))));
  CHECK(signature(f.domain()) == signature(f.codomain()));
  CHECK_THROWS_AS(parse_mor("phi2(one; X2)"), TypingError);
}

TEST_CASE("generator shapes", "[dsl]") {
  auto k = parse_mor("kappa(M, X1)");
  CHECK(k.domain().to_string() == "act(M, X1)");
  CHECK(k.codomain().to_string() == "act(M, Phi(X1))");
  auto t = parse_mor("t(X1)");
  CHECK(t.domain() == O::phi(O::phi(O::gen(1))));
  CHECK(t.codomain() == O::gen(1));
  auto a = parse_mor("alpha(X1, X2, X3)");
  CHECK(a.domain().to_string() == "tensor(tensor(X1, X2), X3)");
  CHECK(a.codomain().to_string() == "tensor(X1, tensor(X2, X3))");
  CHECK(parse_mor("phi0()").domain() == O::phi(O::one()));
  CHECK(parse_mor("r(oneM)").domain() == O::act(O::module_unit(), O::one()));
  CHECK(parse_mor("lambda(X3)").domain() == O::tensor(O::one(), O::gen(3)));
  CHECK(parse_mor("inv(rho(X3))").codomain() == O::tensor(O::gen(3), O::one()));
}

TEST_CASE("signatures", "[dsl]") {
  CHECK(sig("tensor(X1, X2)") == "[(1,0), (2,0)]");
  CHECK(sig("Phi(tensor(X1, X2))") == "[(2,1), (1,1)]");
  CHECK(sig("Phi(Phi(X1))") == "[(1,0)]");
  CHECK(sig("tensor(one, Phi(one))") == "[]");
  CHECK(sig("act(act(M, X1), Phi(X2))") == "[M; (1,0), (2,1)]");
}

TEST_CASE("parse errors carry positions", "[dsl]") {
  try {
    parse_mor("vert(sigma(X1, X2),\n  bogus(X1))");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_mor("sigma(X1, X2"), ParseError);
  CHECK_THROWS_AS(parse_mor("sigma(X1)"), Error);
  CHECK_THROWS_AS(parse_mor("kappa(X1, X2)"), TypingError);
  CHECK_THROWS_AS(parse_mor("sigma(M, X2)"), TypingError);
  CHECK_THROWS_AS(parse_mor("vert(sigma(X1, X2), sigma(X1, X2))").codomain(),
                  TypingError);
  CHECK_THROWS_AS(parse_object("Phi(M)"), TypingError);
  CHECK_THROWS_AS(parse_object("act(X1, X2)"), TypingError);
  CHECK_THROWS_AS(parse_object("tensor(M, X2)"), TypingError);
}

TEST_CASE("horiz desugars", "[dsl]") {
  auto h = parse_mor("horiz(sigma(tensor(X2, X1), X3); sigma(X1, X2), id(X3))");
  CHECK(h.domain().to_string() == "tensor(tensor(X1, X2), X3)");
  CHECK(h.codomain().to_string() == "tensor(X3, tensor(X2, X1))");
  CHECK(cyl_braid_eq(underlying_braid(h), underlying_braid(d_of(h))));
  auto d = d_of(h);
  CHECK(d.domain() == h.domain());
  CHECK(d.codomain() == h.codomain());
  CHECK_THROWS_AS(parse_mor("horiz(sigma(X1, X2); sigma(X1, X2), id(X3))"),
                  TypingError);
}

TEST_CASE("diagram files", "[dsl]") {
  auto d = parse_diagram(
      "# comment\n"
      "name=sq\n"
      "flavor=symmetric\n"
      "lhs=vert(sigma(X2, X1),\n"
      "  sigma(X1, X2))\n"
      "rhs=id(tensor(X1, X2))\n");
  CHECK(d.name == "sq");
  CHECK(d.flavor == Flavor::symmetric);
  CHECK(d.lhs.kind() == MorExpr::Kind::vert);
  auto again = parse_diagram(to_string(d));
  CHECK(again.lhs == d.lhs);
  CHECK(again.rhs == d.rhs);
  CHECK(again.flavor == d.flavor);
  CHECK_THROWS_AS(parse_diagram("lhs=id(X1)\nlhs=id(X1)\nrhs=id(X1)\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("lhs=id(X1)\nflavor=weird\nrhs=id(X1)\n"), Error);
  CHECK_THROWS_AS(parse_diagram("lhs=id(X1)\n"), ParseError);
}

TEST_CASE("random terms round trip and keep leaf multisets", "[dsl][random]") {
  auto       g = testing::rng(11);
  testing::MorGen gen(g);
  for (int i = 0; i < 400; ++i) {
    auto f    = gen.random(testing::uniform(g, 0, 6), i % 2 == 0);
    auto text = f.to_string();
    auto back = parse_mor(text);
    REQUIRE(back == f);
    REQUIRE(back.to_string() == text);
    auto sd = signature(f.domain()), sc = signature(f.codomain());
    std::multiset<int> ld, lc;
    for (auto const& l : sd.leaves) {
      ld.insert(l.label);
    }
    for (auto const& l : sc.leaves) {
      lc.insert(l.label);
    }
    REQUIRE(ld == lc);
  }
}

TEST_CASE("normalize examples", "[normalize]") {
  auto k  = parse_mor("kappa(M, tensor(X1, X2))");
  auto nk = normalize_presentation(k);
  CHECK(count_gen(nk, GenKind::kappa) == 2);
  CHECK(count_gen(nk, GenKind::sigma) == 1);
  CHECK(single_strand(nk));
  CHECK(nk.domain() == k.domain());
  CHECK(nk.codomain() == k.codomain());

  auto s = parse_mor("sigma(X1, X2)");
  CHECK(normalize_presentation(s) == s);
  auto k1 = parse_mor("kappa(M, Phi(X1))");
  CHECK(normalize_presentation(k1) == k1);

  auto ku = parse_mor("kappa(M, one)");
  auto nu = normalize_presentation(ku);
  CHECK(count_gen(nu, GenKind::kappa) == 0);
  CHECK(nu.domain() == ku.domain());
  CHECK(nu.codomain() == ku.codomain());
  CHECK(underlying_braid(nu).letters().empty());
  CHECK(underlying_braid(ku).letters().empty());
}

TEST_CASE("normal objects", "[normalize]") {
  auto o = parse_object("Phi(tensor(tensor(X1, one), Phi(X2)))");
  CHECK(normal_object(o).to_string() == "tensor(Phi(Phi(X2)), Phi(X1))");
  auto n = normalizer(o);
  CHECK(n.domain() == o);
  CHECK(n.codomain() == normal_object(o));
  auto m = parse_object("act(act(oneM, tensor(X1, X2)), X3)");
  CHECK(normalizer(m).codomain() == normal_object(m));
  CHECK(signature(normal_object(m)) == signature(m));
}

TEST_CASE("normalize on random terms", "[normalize][random]") {
  auto       g = testing::rng(12);
  testing::MorGen gen(g);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.random(testing::uniform(g, 0, 6), i % 2 == 1);
    auto n = normalize_presentation(f);
    REQUIRE(n.domain() == f.domain());
    REQUIRE(n.codomain() == f.codomain());
    REQUIRE(single_strand(n));
    REQUIRE(cyl_braid_eq(underlying_braid(n), underlying_braid(f)));
  }
}
