#include "orbibraid/normalize.hpp"

#include <vector>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    using K = ObjectExpr::Kind;
    using G = GenKind;

    MorExpr gen(G k, std::vector<ObjectExpr> p) {
      return MorExpr::gen(k, std::move(p));
    }

    MorExpr id(ObjectExpr const& o) {
      return MorExpr::id(o);
    }

    bool trivial(MorExpr const& f) {
      switch (f.kind()) {
        case MorExpr::Kind::identity:
          return true;
        case MorExpr::Kind::tens:
        case MorExpr::Kind::act:
          return trivial(f.child(0)) && trivial(f.child(1));
        case MorExpr::Kind::phi:
        case MorExpr::Kind::inverse:
          return trivial(f.child(0));
        default:
          return false;
      }
    }

    MorExpr inv(MorExpr const& f) {
      return trivial(f) ? f : MorExpr::inv(f);
    }

    // f after g, dropping identities
    MorExpr then(MorExpr const& g, MorExpr const& f) {
      if (trivial(g)) {
        return f;
      }
      if (trivial(f)) {
        return g;
      }
      return MorExpr::vert(f, g);
    }

    MorExpr chain(std::vector<MorExpr> const& steps) {
      MorExpr acc = steps.front();
      for (std::size_t i = 1; i < steps.size(); ++i) {
        acc = then(acc, steps[i]);
      }
      return acc;
    }

    bool is_leaf(ObjectExpr const& o) {
      return o.kind() == K::generator
             || (o.kind() == K::phi && is_leaf(o.child(0)));
    }

    bool is_module_leaf(ObjectExpr const& o) {
      return o.kind() == K::module || o.kind() == K::module_unit;
    }

    ////////////////////////////////////////////////////////////////////////
    // Object normalizers
    ////////////////////////////////////////////////////////////////////////

    // tensor(x, y) -> normal form, for x, y in normal form
    MorExpr merge(ObjectExpr const& x, ObjectExpr const& y) {
      if (x.kind() == K::unit) {
        return gen(G::lambda, {y});
      }
      if (y.kind() == K::unit) {
        return gen(G::rho, {x});
      }
      if (is_leaf(x)) {
        return id(ObjectExpr::tensor(x, y));
      }
      auto const& a = x.child(0);
      auto const& r = x.child(1);
      return then(gen(G::alpha, {a, r, y}), MorExpr::tens(id(a), merge(r, y)));
    }

    // Phi(x) -> normal form, for x in normal form
    MorExpr push_phi(ObjectExpr const& x) {
      if (x.kind() == K::unit) {
        return gen(G::phi0, {});
      }
      if (is_leaf(x)) {
        return id(ObjectExpr::phi(x));
      }
      auto const& a    = x.child(0);
      auto const& r    = x.child(1);
      auto        fa   = ObjectExpr::phi(a);
      MorExpr     pr   = push_phi(r);
      return chain({MorExpr::inv(gen(G::phi2, {r, a})),
                    MorExpr::tens(pr, id(fa)),
                    merge(pr.codomain(), fa)});
    }

    MorExpr normalize_a(ObjectExpr const& o) {
      switch (o.kind()) {
        case K::generator:
        case K::unit:
          return id(o);
        case K::tensor: {
          MorExpr nx = normalize_a(o.child(0));
          MorExpr ny = normalize_a(o.child(1));
          return then(MorExpr::tens(nx, ny), merge(nx.codomain(), ny.codomain()));
        }
        case K::phi: {
          MorExpr nx = normalize_a(o.child(0));
          return then(MorExpr::phi(nx), push_phi(nx.codomain()));
        }
        default:
          throw TypingError("expected an A-typed object, got " + o.to_string());
      }
    }

    // act(p, x) -> normal form, for p, x in normal form
    MorExpr merge_m(ObjectExpr const& p, ObjectExpr const& x) {
      if (x.kind() == K::unit) {
        return gen(G::r, {p});
      }
      if (is_module_leaf(p)) {
        return id(ObjectExpr::act(p, x));
      }
      auto const& m = p.child(0);
      auto const& l = p.child(1);
      return then(gen(G::a, {m, l, x}), MorExpr::act(id(m), merge(l, x)));
    }

    MorExpr normalize_m(ObjectExpr const& o) {
      if (is_module_leaf(o)) {
        return id(o);
      }
      MorExpr np = normalize_m(o.child(0));
      MorExpr nx = normalize_a(o.child(1));
      return then(MorExpr::act(np, nx), merge_m(np.codomain(), nx.codomain()));
    }

    ////////////////////////////////////////////////////////////////////////
    // Braidings on normal forms
    ////////////////////////////////////////////////////////////////////////

    MorExpr sigma_nf(ObjectExpr const& x, ObjectExpr const& y) {
      if (x.kind() == K::unit) {
        return then(gen(G::lambda, {y}), MorExpr::inv(gen(G::rho, {y})));
      }
      if (y.kind() == K::unit) {
        return then(gen(G::rho, {x}), MorExpr::inv(gen(G::lambda, {x})));
      }
      if (is_leaf(x) && is_leaf(y)) {
        return gen(G::sigma, {x, y});
      }
      if (!is_leaf(x)) {
        auto const& a  = x.child(0);
        auto const& x2 = x.child(1);
        return chain({gen(G::alpha, {a, x2, y}),
                      MorExpr::tens(id(a), sigma_nf(x2, y)),
                      MorExpr::inv(gen(G::alpha, {a, y, x2})),
                      MorExpr::tens(sigma_nf(a, y), id(x2)),
                      gen(G::alpha, {y, a, x2})});
      }
      auto const& b  = y.child(0);
      auto const& y2 = y.child(1);
      return chain({MorExpr::inv(gen(G::alpha, {x, b, y2})),
                    MorExpr::tens(gen(G::sigma, {x, b}), id(y2)),
                    gen(G::alpha, {b, x, y2}),
                    MorExpr::tens(id(b), sigma_nf(x, y2)),
                    MorExpr::inv(gen(G::alpha, {b, y2, x}))});
    }

    MorExpr kappa_nf(ObjectExpr const& p, ObjectExpr const& y) {
      if (y.kind() == K::unit) {
        return MorExpr::act(id(p), MorExpr::inv(gen(G::phi0, {})));
      }
      if (is_leaf(y)) {
        if (is_module_leaf(p)) {
          return gen(G::kappa, {p, y});
        }
        // BP1
        auto const& m  = p.child(0);
        auto const& l  = p.child(1);
        auto        fy = ObjectExpr::phi(y);
        return chain({gen(G::a, {m, l, y}),
                      MorExpr::act(id(m), sigma_nf(l, y)),
                      MorExpr::inv(gen(G::a, {m, y, l})),
                      MorExpr::act(gen(G::kappa, {m, y}), id(l)),
                      gen(G::a, {m, fy, l}),
                      MorExpr::act(id(m), sigma_nf(fy, l)),
                      MorExpr::inv(gen(G::a, {m, l, fy}))});
      }
      // BP2
      auto const& y1  = y.child(0);
      auto const& y2  = y.child(1);
      auto        fy1 = ObjectExpr::phi(y1);
      auto        fy2 = ObjectExpr::phi(y2);
      return chain({MorExpr::inv(gen(G::a, {p, y1, y2})),
                    MorExpr::act(kappa_nf(p, y1), id(y2)),
                    gen(G::a, {p, fy1, y2}),
                    MorExpr::act(id(p), sigma_nf(fy1, y2)),
                    MorExpr::inv(gen(G::a, {p, y2, fy1})),
                    MorExpr::act(kappa_nf(p, y2), id(fy1)),
                    gen(G::a, {p, fy2, fy1}),
                    MorExpr::act(id(p), gen(G::phi2, {y2, y1}))});
    }

    MorExpr expand(MorExpr const& f) {
      using MK = MorExpr::Kind;
      switch (f.kind()) {
        case MK::identity:
          return f;
        case MK::generator: {
          auto const& p = f.params();
          if (f.generator() == G::sigma) {
            if (is_leaf(p[0]) && is_leaf(p[1])) {
              return f;
            }
            MorExpr nx = normalize_a(p[0]);
            MorExpr ny = normalize_a(p[1]);
            return chain({MorExpr::tens(nx, ny),
                          sigma_nf(nx.codomain(), ny.codomain()),
                          MorExpr::tens(inv(ny), inv(nx))});
          }
          if (f.generator() == G::kappa) {
            if (is_module_leaf(p[0]) && is_leaf(p[1])) {
              return f;
            }
            MorExpr np = normalize_m(p[0]);
            MorExpr ny = normalize_a(p[1]);
            return chain({MorExpr::act(np, ny),
                          kappa_nf(np.codomain(), ny.codomain()),
                          MorExpr::act(inv(np), MorExpr::phi(inv(ny)))});
          }
          return f;
        }
        case MK::inverse:
          return MorExpr::inv(expand(f.child(0)));
        case MK::vert:
          return MorExpr::vert(expand(f.child(0)), expand(f.child(1)));
        case MK::tens:
          return MorExpr::tens(expand(f.child(0)), expand(f.child(1)));
        case MK::act:
          return MorExpr::act(expand(f.child(0)), expand(f.child(1)));
        case MK::phi:
          return MorExpr::phi(expand(f.child(0)));
        case MK::horiz:
          return expand(f.desugared());
      }
      return f;
    }
  }  // namespace

  MorExpr normalizer(ObjectExpr const& o) {
    return o.module_typed() ? normalize_m(o) : normalize_a(o);
  }

  ObjectExpr normal_object(ObjectExpr const& o) {
    return normalizer(o).codomain();
  }

  MorExpr normalize_presentation(MorExpr const& f) {
    f.require_typed();
    return expand(f);
  }

}  // namespace orbibraid
