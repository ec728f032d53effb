#include "orbibraid/morphisms.hpp"

#include <algorithm>
#include <array>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    struct GenInfo {
      GenKind     kind;
      char const* name;
      std::size_t params;
    };

    constexpr std::array<GenInfo, 10> generators{{{GenKind::alpha, "alpha", 3},
                                                  {GenKind::lambda, "lambda", 1},
                                                  {GenKind::rho, "rho", 1},
                                                  {GenKind::a, "a", 3},
                                                  {GenKind::r, "r", 1},
                                                  {GenKind::sigma, "sigma", 2},
                                                  {GenKind::kappa, "kappa", 2},
                                                  {GenKind::phi2, "phi2", 2},
                                                  {GenKind::phi0, "phi0", 0},
                                                  {GenKind::t, "t", 1}}};

    GenInfo const& info(GenKind k) {
      return generators[static_cast<std::size_t>(k)];
    }

    struct ObjOps {
      using T = ObjectExpr;
      static T one() {
        return ObjectExpr::one();
      }
      static T tensor(T const& x, T const& y) {
        return ObjectExpr::tensor(x, y);
      }
      static T act(T const& x, T const& y) {
        return ObjectExpr::act(x, y);
      }
      static T phi(T const& x) {
        return ObjectExpr::phi(x);
      }
    };

    struct MorOps {
      using T = MorExpr;
      static T one() {
        return MorExpr::id(ObjectExpr::one());
      }
      static T tensor(T const& x, T const& y) {
        return MorExpr::tens(x, y);
      }
      static T act(T const& x, T const& y) {
        return MorExpr::act(x, y);
      }
      static T phi(T const& x) {
        return MorExpr::phi(x);
      }
    };

    template <typename Ops>
    typename Ops::T dom_shape(GenKind k, std::vector<typename Ops::T> const& x) {
      switch (k) {
        case GenKind::alpha:
          return Ops::tensor(Ops::tensor(x[0], x[1]), x[2]);
        case GenKind::lambda:
          return Ops::tensor(Ops::one(), x[0]);
        case GenKind::rho:
          return Ops::tensor(x[0], Ops::one());
        case GenKind::a:
          return Ops::act(Ops::act(x[0], x[1]), x[2]);
        case GenKind::r:
          return Ops::act(x[0], Ops::one());
        case GenKind::sigma:
          return Ops::tensor(x[0], x[1]);
        case GenKind::kappa:
          return Ops::act(x[0], x[1]);
        case GenKind::phi2:
          return Ops::tensor(Ops::phi(x[0]), Ops::phi(x[1]));
        case GenKind::phi0:
          return Ops::phi(Ops::one());
        case GenKind::t:
          return Ops::phi(Ops::phi(x[0]));
      }
      throw Error("unreachable");
    }

    template <typename Ops>
    typename Ops::T cod_shape(GenKind k, std::vector<typename Ops::T> const& x) {
      switch (k) {
        case GenKind::alpha:
          return Ops::tensor(x[0], Ops::tensor(x[1], x[2]));
        case GenKind::lambda:
        case GenKind::rho:
        case GenKind::r:
        case GenKind::t:
          return x[0];
        case GenKind::a:
          return Ops::act(x[0], Ops::tensor(x[1], x[2]));
        case GenKind::sigma:
          return Ops::tensor(x[1], x[0]);
        case GenKind::kappa:
          return Ops::act(x[0], Ops::phi(x[1]));
        case GenKind::phi2:
          return Ops::phi(Ops::tensor(x[1], x[0]));
        case GenKind::phi0:
          return Ops::one();
      }
      throw Error("unreachable");
    }

    template <typename T>
    void check_count(GenKind k, std::vector<T> const& x) {
      if (x.size() != info(k).params) {
        throw TypingError(std::string(info(k).name) + " takes "
                          + std::to_string(info(k).params) + " parameters, got "
                          + std::to_string(x.size()));
      }
    }

    std::string gen_text(GenKind k, std::vector<ObjectExpr> const& p) {
      std::string out = std::string(info(k).name) + "(";
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
          out += (k == GenKind::phi2 ? "; " : ", ");
        }
        out += p[i].to_string();
      }
      return out + ")";
    }
  }  // namespace

  std::string to_string(GenKind k) {
    return info(k).name;
  }

  std::optional<GenKind> generator_from_name(std::string const& name) {
    for (auto const& g : generators) {
      if (name == g.name) {
        return g.kind;
      }
    }
    return std::nullopt;
  }

  std::size_t parameter_count(GenKind k) {
    return info(k).params;
  }

  ObjectExpr generator_domain(GenKind k, std::vector<ObjectExpr> const& p) {
    check_count(k, p);
    return dom_shape<ObjOps>(k, p);
  }

  ObjectExpr generator_codomain(GenKind k, std::vector<ObjectExpr> const& p) {
    check_count(k, p);
    return cod_shape<ObjOps>(k, p);
  }

  MorExpr generator_domain(GenKind k, std::vector<MorExpr> const& fs) {
    check_count(k, fs);
    return dom_shape<MorOps>(k, fs);
  }

  MorExpr generator_codomain(GenKind k, std::vector<MorExpr> const& fs) {
    check_count(k, fs);
    return cod_shape<MorOps>(k, fs);
  }

  ////////////////////////////////////////////////////////////////////////
  // MorExpr
  ////////////////////////////////////////////////////////////////////////

  struct MorExpr::Node {
    Kind                    kind;
    GenKind                 gen = GenKind::alpha;
    std::vector<ObjectExpr> params;
    std::vector<MorExpr>    children;
    ObjectExpr              dom;
    ObjectExpr              cod;
    bool                    braided = false;
    std::string             error;
  };

  namespace {
    std::string first_error(std::vector<MorExpr> const& v) {
      for (auto const& f : v) {
        if (!f.well_typed()) {
          return f.typing_error();
        }
      }
      return {};
    }

    bool any_braided(std::vector<MorExpr> const& v) {
      return std::any_of(v.begin(), v.end(),
                         [](MorExpr const& f) { return f.braided(); });
    }
  }  // namespace

  MorExpr MorExpr::gen(GenKind k, std::vector<ObjectExpr> params) {
    Node n{Kind::generator, k, std::move(params), {}, {}, {}, false, {}};
    if (k == GenKind::phi2) {
      for (auto const& p : n.params) {
        if (p.kind() == ObjectExpr::Kind::unit) {
          throw TypingError("phi2 at the unit object is not a structural "
                            "isomorphism here; use phi0 in "
                            + gen_text(k, n.params));
        }
      }
    }
    try {
      n.dom = generator_domain(k, n.params);
      n.cod = generator_codomain(k, n.params);
    } catch (TypingError const& e) {
      throw TypingError(std::string(e.what()) + " in " + gen_text(k, n.params));
    }
    n.braided = k == GenKind::sigma || k == GenKind::kappa;
    return MorExpr(std::make_shared<Node const>(std::move(n)));
  }

  MorExpr MorExpr::id(ObjectExpr const& o) {
    return MorExpr(std::make_shared<Node const>(
        Node{Kind::identity, GenKind::alpha, {o}, {}, o, o, false, {}}));
  }

  MorExpr MorExpr::inv(MorExpr const& f) {
    return MorExpr(std::make_shared<Node const>(
        Node{Kind::inverse, GenKind::alpha, {}, {f}, f.raw_codomain(),
             f.raw_domain(), f.braided(), f.typing_error()}));
  }

  MorExpr MorExpr::vert(MorExpr const& f, MorExpr const& g) {
    std::string err = first_error({f, g});
    if (err.empty() && g.raw_codomain() != f.raw_domain()) {
      err = "vert seam mismatch: " + g.to_string() + " ends at "
            + g.raw_codomain().to_string() + " but " + f.to_string()
            + " starts at " + f.raw_domain().to_string();
    }
    return MorExpr(std::make_shared<Node const>(
        Node{Kind::vert, GenKind::alpha, {}, {f, g}, g.raw_domain(),
             f.raw_codomain(), f.braided() || g.braided(), err}));
  }

  MorExpr MorExpr::tens(MorExpr const& f, MorExpr const& g) {
    try {
      auto dom = ObjectExpr::tensor(f.raw_domain(), g.raw_domain());
      auto cod = ObjectExpr::tensor(f.raw_codomain(), g.raw_codomain());
      return MorExpr(std::make_shared<Node const>(
          Node{Kind::tens, GenKind::alpha, {}, {f, g}, dom, cod,
               f.braided() || g.braided(), first_error({f, g})}));
    } catch (TypingError const&) {
      throw TypingError("tens of M-typed morphism in tens(" + f.to_string()
                        + ", " + g.to_string() + ")");
    }
  }

  MorExpr MorExpr::act(MorExpr const& f, MorExpr const& g) {
    try {
      auto dom = ObjectExpr::act(f.raw_domain(), g.raw_domain());
      auto cod = ObjectExpr::act(f.raw_codomain(), g.raw_codomain());
      return MorExpr(std::make_shared<Node const>(
          Node{Kind::act, GenKind::alpha, {}, {f, g}, dom, cod,
               f.braided() || g.braided(), first_error({f, g})}));
    } catch (TypingError const&) {
      throw TypingError("act expects (M-typed, A-typed) morphisms in act("
                        + f.to_string() + ", " + g.to_string() + ")");
    }
  }

  MorExpr MorExpr::phi(MorExpr const& f) {
    if (f.module_typed()) {
      throw TypingError("phi of M-typed morphism " + f.to_string());
    }
    return MorExpr(std::make_shared<Node const>(
        Node{Kind::phi, GenKind::alpha, {}, {f}, ObjectExpr::phi(f.raw_domain()),
             ObjectExpr::phi(f.raw_codomain()), f.braided(), f.typing_error()}));
  }

  namespace {
    // id_tensor, id_act, id_Phi applied to inner morphisms
    MorExpr apply_identity(ObjectExpr const& o, std::vector<MorExpr> const& fs) {
      using OK = ObjectExpr::Kind;
      switch (o.kind()) {
        case OK::tensor:
          return MorExpr::tens(fs[0], fs[1]);
        case OK::act:
          return MorExpr::act(fs[0], fs[1]);
        case OK::phi:
          return MorExpr::phi(fs[0]);
        default:
          break;
      }
      throw TypingError("horiz: id(" + o.to_string()
                        + ") is not a tensor, act or Phi identity");
    }

    std::size_t identity_arity(ObjectExpr const& o) {
      using OK = ObjectExpr::Kind;
      return o.kind() == OK::phi ? 1
             : o.kind() == OK::tensor || o.kind() == OK::act ? 2
                                                               : 0;
    }
  }  // namespace

  MorExpr MorExpr::horiz(MorExpr const& outer, std::vector<MorExpr> inners) {
    if (outer.kind() == Kind::identity) {
      ObjectExpr const& o = outer.params()[0];
      std::size_t       k = identity_arity(o);
      if (k == 0 || inners.size() != k) {
        throw TypingError("horiz: " + outer.to_string() + " needs "
                          + std::to_string(k) + " inner morphisms");
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (inners[i].raw_codomain() != o.child(i)) {
          throw TypingError("horiz: component " + std::to_string(i + 1) + " of "
                            + outer.to_string() + " must be the codomain "
                            + inners[i].raw_codomain().to_string() + " of "
                            + inners[i].to_string());
        }
      }
      MorExpr              side = apply_identity(o, inners);
      std::vector<MorExpr> ch{outer};
      ch.insert(ch.end(), inners.begin(), inners.end());
      return MorExpr(std::make_shared<Node const>(
          Node{Kind::horiz, GenKind::alpha, {}, ch, side.raw_domain(), o,
               any_braided(ch), first_error(ch)}));
    }
    bool           inverse = outer.kind() == Kind::inverse;
    MorExpr const& g       = inverse ? outer.child(0) : outer;
    if (g.kind() != Kind::generator) {
      throw TypingError("horiz needs a generator or inv(generator) outside, got "
                        + outer.to_string());
    }
    GenKind k = g.generator();
    if (inners.size() != parameter_count(k)) {
      throw TypingError("horiz: " + g.to_string() + " needs "
                        + std::to_string(parameter_count(k)) + " inner morphisms");
    }
    for (std::size_t i = 0; i < inners.size(); ++i) {
      if (inners[i].raw_codomain() != g.params()[i]) {
        throw TypingError("horiz: parameter " + std::to_string(i + 1) + " of "
                          + g.to_string() + " must be the codomain "
                          + inners[i].raw_codomain().to_string() + " of "
                          + inners[i].to_string());
      }
    }
    std::vector<ObjectExpr> doms;
    for (auto const& f : inners) {
      doms.push_back(f.raw_domain());
    }
    ObjectExpr dom = inverse ? generator_codomain(k, doms) : generator_domain(k, doms);
    ObjectExpr cod = outer.raw_codomain();
    std::vector<MorExpr> ch{outer};
    ch.insert(ch.end(), inners.begin(), inners.end());
    bool br = any_braided(ch);
    return MorExpr(std::make_shared<Node const>(
        Node{Kind::horiz, GenKind::alpha, {}, ch, dom, cod, br, first_error(ch)}));
  }

  MorExpr::Kind MorExpr::kind() const noexcept {
    return _node->kind;
  }

  GenKind MorExpr::generator() const {
    if (_node->kind != Kind::generator) {
      throw Error("not a generator");
    }
    return _node->gen;
  }

  std::vector<ObjectExpr> const& MorExpr::params() const {
    return _node->params;
  }

  std::vector<MorExpr> const& MorExpr::children() const {
    return _node->children;
  }

  MorExpr const& MorExpr::child(std::size_t i) const {
    return _node->children.at(i);
  }

  ObjectExpr const& MorExpr::domain() const {
    require_typed();
    return _node->dom;
  }

  ObjectExpr const& MorExpr::codomain() const {
    require_typed();
    return _node->cod;
  }

  ObjectExpr const& MorExpr::raw_domain() const noexcept {
    return _node->dom;
  }

  ObjectExpr const& MorExpr::raw_codomain() const noexcept {
    return _node->cod;
  }

  bool MorExpr::well_typed() const noexcept {
    return _node->error.empty();
  }

  std::string const& MorExpr::typing_error() const noexcept {
    return _node->error;
  }

  void MorExpr::require_typed() const {
    if (!_node->error.empty()) {
      throw TypingError(_node->error);
    }
  }

  bool MorExpr::module_typed() const noexcept {
    return _node->dom.module_typed();
  }

  std::size_t MorExpr::strand_count() const noexcept {
    return _node->dom.leaf_count();
  }

  bool MorExpr::braided() const noexcept {
    return _node->braided;
  }

  MorExpr MorExpr::desugared() const {
    switch (kind()) {
      case Kind::generator:
      case Kind::identity:
        return *this;
      case Kind::inverse:
        return inv(child(0).desugared());
      case Kind::vert:
        return vert(child(0).desugared(), child(1).desugared());
      case Kind::tens:
        return tens(child(0).desugared(), child(1).desugared());
      case Kind::act:
        return act(child(0).desugared(), child(1).desugared());
      case Kind::phi:
        return phi(child(0).desugared());
      case Kind::horiz: {
        MorExpr const& outer = child(0);
        if (outer.kind() == Kind::identity) {
          std::vector<MorExpr> inners;
          for (std::size_t i = 1; i < children().size(); ++i) {
            inners.push_back(child(i).desugared());
          }
          return apply_identity(outer.params()[0], inners);
        }
        bool                 inverse = outer.kind() == Kind::inverse;
        GenKind              k = (inverse ? outer.child(0) : outer).generator();
        std::vector<MorExpr> inners;
        for (std::size_t i = 1; i < children().size(); ++i) {
          inners.push_back(child(i).desugared());
        }
        MorExpr before = inverse ? generator_codomain(k, inners)
                                 : generator_domain(k, inners);
        return vert(outer, before);
      }
    }
    return *this;
  }

  std::string MorExpr::to_string() const {
    switch (kind()) {
      case Kind::generator:
        return gen_text(_node->gen, _node->params);
      case Kind::identity:
        return "id(" + _node->params[0].to_string() + ")";
      case Kind::inverse:
        return "inv(" + child(0).to_string() + ")";
      case Kind::vert:
        return "vert(" + child(0).to_string() + ", " + child(1).to_string() + ")";
      case Kind::tens:
        return "tens(" + child(0).to_string() + ", " + child(1).to_string() + ")";
      case Kind::act:
        return "act(" + child(0).to_string() + ", " + child(1).to_string() + ")";
      case Kind::phi:
        return "phi(" + child(0).to_string() + ")";
      case Kind::horiz: {
        std::string out = "horiz(" + child(0).to_string() + ";";
        for (std::size_t i = 1; i < children().size(); ++i) {
          out += (i == 1 ? " " : ", ") + child(i).to_string();
        }
        return out + ")";
      }
    }
    return "";
  }

  bool operator==(MorExpr const& f, MorExpr const& g) {
    if (f._node == g._node) {
      return true;
    }
    auto const& a = *f._node;
    auto const& b = *g._node;
    return a.kind == b.kind && a.gen == b.gen && a.params == b.params
           && a.children == b.children;
  }

  ObjectExpr const& domain(MorExpr const& f) {
    return f.domain();
  }

  ObjectExpr const& codomain(MorExpr const& f) {
    return f.codomain();
  }

}  // namespace orbibraid
