#include "orbibraid/operad.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

  std::string to_string(Color c) {
    return c == Color::D ? "D" : "Dstar";
  }

  Color parse_color(std::string const& s) {
    if (s == "D") {
      return Color::D;
    }
    if (s == "Dstar" || s == "D*") {
      return Color::Dstar;
    }
    throw TypingError("unknown color '" + s + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // SignedOp
  ////////////////////////////////////////////////////////////////////////

  SignedOp::SignedOp(Color              output,
                     std::vector<Color> inputs,
                     std::vector<int>   eps,
                     Permutation        perm)
      : _output(output),
        _inputs(std::move(inputs)),
        _eps(std::move(eps)),
        _perm(std::move(perm)) {
    std::size_t stars
        = std::count(_inputs.begin(), _inputs.end(), Color::Dstar);
    if (_output == Color::D && stars > 0) {
      throw TypingError("an operation into D has no Dstar inputs");
    }
    if (stars > 1) {
      throw TypingError("at most one Dstar input");
    }
    if (stars == 1 && _inputs[0] != Color::Dstar) {
      throw TypingError("the Dstar input must come first");
    }
    std::size_t d = _inputs.size() - stars;
    if (_eps.size() != d || _perm.degree() != d) {
      throw ArityError("eps and perm must have one entry per D-input");
    }
    for (int e : _eps) {
      if (e != 0 && e != 1) {
        throw TypingError("eps entries are bits");
      }
    }
  }

  SignedOp SignedOp::identity(Color c) {
    if (c == Color::D) {
      return SignedOp(Color::D, {Color::D}, {0}, Permutation::identity(1));
    }
    return SignedOp(Color::Dstar, {Color::Dstar}, {}, Permutation::identity(0));
  }

  std::string SignedOp::to_string() const {
    std::string out = "op " + orbibraid::to_string(_output) + " [";
    for (std::size_t i = 0; i < _inputs.size(); ++i) {
      out += (i == 0 ? "" : ",") + orbibraid::to_string(_inputs[i]);
    }
    out += "] eps=";
    for (int e : _eps) {
      out += static_cast<char>('0' + e);
    }
    return out + " perm=" + _perm.to_string();
  }

  SignedOp SignedOp::parse(std::string const& text) {
    auto bad = [&](std::string const& why) {
      return TypingError("bad operation '" + text + "': " + why);
    };
    auto lb = text.find('[');
    auto rb = text.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
      throw bad("missing input colors");
    }
    std::istringstream head(text.substr(0, lb));
    std::string        kw, out;
    head >> kw >> out;
    if (kw != "op" || out.empty()) {
      throw bad("expected 'op <color>'");
    }
    std::vector<Color> inputs;
    std::string        list = text.substr(lb + 1, rb - lb - 1);
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream cols(list);
    for (std::string c; cols >> c;) {
      inputs.push_back(parse_color(c));
    }
    std::vector<int>   eps;
    std::string        perm_text;
    bool               seen_eps = false, seen_perm = false;
    std::istringstream tail(text.substr(rb + 1));
    for (std::string tok; tail >> tok;) {
      if (tok.rfind("eps=", 0) == 0) {
        for (char ch : tok.substr(4)) {
          if (ch != '0' && ch != '1') {
            throw bad("eps must be bits");
          }
          eps.push_back(ch - '0');
        }
        seen_eps = true;
      } else if (tok.rfind("perm=", 0) == 0) {
        perm_text = tok.substr(5);
        seen_perm = true;
      } else {
        throw bad("unexpected '" + tok + "'");
      }
    }
    if (!seen_eps || !seen_perm) {
      throw bad("missing eps= or perm=");
    }
    Permutation perm;
    try {
      perm = Permutation::parse(perm_text);
    } catch (Error const&) {
      throw bad("perm is not a permutation");
    }
    return SignedOp(parse_color(out), std::move(inputs), std::move(eps),
                    std::move(perm));
  }

  ////////////////////////////////////////////////////////////////////////
  // classify / compose
  ////////////////////////////////////////////////////////////////////////

  std::vector<SignedOp> classify(std::size_t               k,
                                 Color                     output,
                                 std::vector<Color> const& input_colors) {
    if (input_colors.size() != k) {
      throw ArityError("k does not match the number of input colors");
    }
    std::size_t stars
        = std::count(input_colors.begin(), input_colors.end(), Color::Dstar);
    if ((output == Color::D && stars > 0) || stars > 1) {
      return {};
    }
    std::size_t        d = k - stars;
    std::vector<Color> inputs(stars, Color::Dstar);
    inputs.insert(inputs.end(), d, Color::D);

    std::vector<SignedOp> out;
    auto                  perms = all_permutations(d);
    for (std::size_t bits = 0; bits < (std::size_t(1) << d); ++bits) {
      std::vector<int> eps(d);
      for (std::size_t j = 0; j < d; ++j) {
        eps[j] = (bits >> (d - 1 - j)) & 1;
      }
      for (auto const& p : perms) {
        out.emplace_back(output, inputs, eps, p);
      }
    }
    return out;
  }

  SignedOp compose(SignedOp const&              g,
                   std::vector<SignedOp> const& fs,
                   Permutation const&           outer_perm) {
    if (fs.size() != g.arity() || outer_perm.degree() != fs.size()) {
      throw ArityError("compose: g has " + std::to_string(g.arity())
                       + " inputs but " + std::to_string(fs.size())
                       + " operations were given");
    }
    std::size_t const star = g.has_star_input() ? 1 : 0;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      auto const& f = fs[outer_perm[i]];
      if (f.output() != g.inputs()[i]) {
        throw TypingError("compose: input " + std::to_string(i + 1)
                          + " of g has color " + to_string(g.inputs()[i])
                          + " but is fed an operation into "
                          + to_string(f.output()));
      }
    }
    std::vector<std::size_t> offset(fs.size() + 1, 0);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      offset[k + 1] = offset[k] + fs[k].d_arity();
    }
    std::size_t const total = offset.back();

    // slot_of[k]: the input of g fed by fs[k]
    std::vector<std::size_t> slot_of(fs.size());
    for (std::size_t i = 0; i < g.arity(); ++i) {
      slot_of[outer_perm[i]] = i;
    }

    std::vector<int> eps(total);
    bool             star_in = false;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      std::size_t slot = slot_of[k];
      int slot_eps = (slot < star) ? 0 : g.eps()[slot - star];
      star_in = star_in || fs[k].has_star_input();
      for (std::size_t j = 0; j < fs[k].d_arity(); ++j) {
        eps[offset[k] + j] = fs[k].eps()[j] ^ slot_eps;
      }
    }

    std::vector<int> perm;
    auto             emit = [&](std::size_t k, bool reversed) {
      auto const& p = fs[k].perm();
      std::size_t n = p.degree();
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t pos = reversed ? n - 1 - q : q;
        perm.push_back(static_cast<int>(offset[k] + p[pos]));
      }
    };
    if (star) {
      emit(outer_perm[0], false);
    }
    for (std::size_t pos = 0; pos < g.d_arity(); ++pos) {
      std::size_t s = g.perm()[pos];
      emit(outer_perm[s + star], g.eps()[s] == 1);
    }

    std::vector<Color> inputs(star_in ? 1 : 0, Color::Dstar);
    inputs.insert(inputs.end(), total, Color::D);
    return SignedOp(g.output(), std::move(inputs), std::move(eps),
                    Permutation(std::move(perm)));
  }

  SignedOp compose(SignedOp const& g, std::vector<SignedOp> const& fs) {
    return compose(g, fs, Permutation::identity(fs.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // brute_force_classify_1d
  ////////////////////////////////////////////////////////////////////////

  SignedOp brute_force_classify_1d(Embedding1D const& e) {
    std::size_t           k = e.disks.size();
    std::vector<Rational> s(k);
    std::vector<int>      eps(k);
    Rational const        zero(0), one(1);

    if (e.output == Color::D && e.star_radius) {
      throw GeometryError("D has no central interval");
    }
    if (e.star_radius && (*e.star_radius <= zero || *e.star_radius >= one)) {
      throw GeometryError("central interval out of range");
    }
    for (std::size_t i = 0; i < k; ++i) {
      auto const& d = e.disks[i];
      if (d.radius <= zero) {
        throw GeometryError("interval " + std::to_string(i + 1)
                            + " has non-positive radius");
      }
      Rational a = abs(d.center);
      if (a + d.radius >= one) {
        throw GeometryError("interval " + std::to_string(i + 1)
                            + " leaves the model interval");
      }
      if (e.output == Color::D) {
        eps[i] = d.copy == Interval1D::Copy::r ? 1 : 0;
        s[i]   = eps[i] ? Rational(-d.center) : d.center;
      } else {
        if (a - d.radius <= zero) {
          throw GeometryError("interval " + std::to_string(i + 1)
                              + " meets its mirror image");
        }
        if (e.star_radius && a - d.radius <= *e.star_radius) {
          throw GeometryError("interval " + std::to_string(i + 1)
                              + " meets the central interval");
        }
        eps[i] = d.center < zero ? 1 : 0;
        s[i]   = a;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Rational gap = abs(Rational(s[i] - s[j]));
        if (gap <= e.disks[i].radius + e.disks[j].radius) {
          throw GeometryError("intervals " + std::to_string(i + 1) + " and "
                              + std::to_string(j + 1) + " overlap");
        }
      }
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s[a] < s[b]; });
    std::vector<Color> inputs(e.star_radius ? 1 : 0, Color::Dstar);
    inputs.insert(inputs.end(), k, Color::D);
    return SignedOp(e.output, std::move(inputs), std::move(eps),
                    Permutation(std::move(order)));
  }

  ////////////////////////////////////////////////////////////////////////
  // realize_functor
  ////////////////////////////////////////////////////////////////////////

  FunctorExpr realize_functor(SignedOp const& op) {
    FunctorExpr f;
    f.powers = op.eps();
    f.perm   = op.perm();
    if (op.output() == Color::D) {
      f.fold = FunctorExpr::Fold::tensor;
    } else if (op.has_star_input()) {
      f.fold = FunctorExpr::Fold::act;
    } else {
      f.fold = FunctorExpr::Fold::unit_module;
    }
    return f;
  }

  std::string FunctorExpr::to_string() const {
    std::vector<std::string> stages;  // in order of application
    std::size_t              k = powers.size();
    if (std::any_of(powers.begin(), powers.end(), [](int e) { return e; })) {
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) {
        s += (i == 0 ? "" : " x ");
        s += powers[i] ? "Phi" : "id";
      }
      stages.push_back(s + ")");
    }
    if (!perm.is_identity()) {
      stages.push_back("perm(" + perm.to_string() + ")");
    }
    if (k == 0) {
      stages.push_back("one");
    } else if (k > 1) {
      stages.push_back("otimes_" + std::to_string(k));
    }
    if (fold == Fold::act) {
      for (auto& s : stages) {
        s = "(id_M x " + s + ")";
      }
      stages.push_back("act");
    } else if (fold == Fold::unit_module) {
      stages.push_back("oneM_act");
    }
    if (stages.empty()) {
      return "id";
    }
    std::string out;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
      out += (out.empty() ? "" : " . ") + *it;
    }
    return out;
  }

  ObjectExpr FunctorExpr::to_object() const {
    std::size_t k = powers.size();
    ObjectExpr  body;
    for (std::size_t p = 0; p < k; ++p) {
      int        i    = perm[p];
      ObjectExpr leaf = ObjectExpr::gen(i + 1);
      if (powers[i]) {
        leaf = ObjectExpr::phi(leaf);
      }
      body = p == 0 ? leaf : ObjectExpr::tensor(body, leaf);
    }
    switch (fold) {
      case Fold::tensor:
        return body;
      case Fold::unit_module:
        return ObjectExpr::act(ObjectExpr::module_unit(), body);
      case Fold::act:
        return ObjectExpr::act(ObjectExpr::module(), body);
    }
    return body;
  }

  SignedOp FunctorExpr::to_signed_op() const {
    std::size_t        k = powers.size();
    Color              out = fold == Fold::tensor ? Color::D : Color::Dstar;
    std::vector<Color> inputs(fold == Fold::act ? 1 : 0, Color::Dstar);
    inputs.insert(inputs.end(), k, Color::D);
    return SignedOp(out, std::move(inputs), powers, perm);
  }

}  // namespace orbibraid
