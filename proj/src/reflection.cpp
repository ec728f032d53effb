#include "orbibraid/reflection.hpp"

#include <array>
#include <utility>

#include "orbibraid/coherence.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/normalize.hpp"

namespace orbibraid {

  namespace {
    std::size_t ipow(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < e; ++i) {
        r *= b;
      }
      return r;
    }

    void require_shape(QMatrix const& a, std::size_t n, char const* name) {
      if (a.rows() != n || a.cols() != n) {
        throw PreconditionError(std::string(name) + " must be " + std::to_string(n)
                                + "x" + std::to_string(n) + ", got "
                                + std::to_string(a.rows()) + "x"
                                + std::to_string(a.cols()));
      }
    }

    void require_invertible(QMatrix const& a, char const* name) {
      if (a.determinant().is_zero()) {
        throw PreconditionError(std::string(name) + " is singular");
      }
    }

    LaurentScalar parse_s(char const* s) {
      return LaurentScalar::parse(s);
    }
  }  // namespace

  void RepData::validate() const {
    if (d == 0 || m == 0) {
      throw PreconditionError("d and m must be positive");
    }
    require_shape(R, d * d, "R");
    require_shape(Rphi, d * d, "Rphi");
    require_shape(Rphiphi, d * d, "Rphiphi");
    require_shape(K, m * d, "K");
    require_shape(T, d, "T");
    require_invertible(R, "R");
    require_invertible(Rphi, "Rphi");
    require_invertible(Rphiphi, "Rphiphi");
    require_invertible(K, "K");
    require_invertible(T, "T");
    if (theta) {
      require_shape(*theta, d, "theta");
      require_invertible(*theta, "theta");
    }
    QMatrix I  = QMatrix::identity(d);
    QMatrix T1 = kron(T, I);
    if (T1 * R * T1.inverse() != Rphi) {
      throw PreconditionError("Rphi is not (T x 1) R (T x 1)^-1");
    }
    QMatrix TT = kron(T, T);
    if (TT * R * TT.inverse() != Rphiphi) {
      throw PreconditionError("Rphiphi is not (T x T) R (T x T)^-1");
    }
  }

  RepData RepData::make(std::size_t d, std::size_t m, QMatrix R, QMatrix K,
                        std::optional<QMatrix> T, std::optional<QMatrix> Rphi,
                        std::optional<QMatrix> Rphiphi) {
    RepData r;
    r.d       = d;
    r.m       = m;
    r.Rphi    = Rphi ? *Rphi : R;
    r.Rphiphi = Rphiphi ? *Rphiphi : R;
    r.R       = std::move(R);
    r.K       = std::move(K);
    r.T       = T ? *T : QMatrix::identity(d);
    return r;
  }

  QMatrix sl2_r_matrix() {
    LaurentScalar q = LaurentScalar::q();
    LaurentScalar c = parse_s("q - q^-1");
    return QMatrix::from_rows({{q, 0, 0, 0}, {0, 1, c, 0}, {0, 0, 1, 0}, {0, 0, 0, q}});
  }

  RepData RepData::sl2(bool twisted) {
    QMatrix R = sl2_r_matrix();
    QMatrix K = QMatrix::from_rows({{parse_s("q - q^-1"), LaurentScalar::q()}, {1, 0}});
    if (!twisted) {
      return make(2, 1, R, K);
    }
    QMatrix T    = QMatrix::from_rows({{1, 0}, {0, -1}});
    QMatrix T1   = kron(T, QMatrix::identity(2));
    QMatrix TT   = kron(T, T);
    QMatrix Rphi = T1 * R * T1.inverse();
    QMatrix Rpp  = TT * R * TT.inverse();
    return make(2, 1, R, T * K, T, Rphi, Rpp);
  }

  bool yang_baxter_check(QMatrix const& R) {
    if (!R.is_square()) {
      throw PreconditionError("R must be square");
    }
    std::size_t d = 1;
    while (d * d < R.rows()) {
      ++d;
    }
    if (d * d != R.rows()) {
      throw PreconditionError("R must be d^2 x d^2");
    }
    QMatrix R12 = pad(R, 1, d);
    QMatrix R23 = pad(R, d, 1);
    QMatrix P23 = pad(QMatrix::flip(d), d, 1);
    QMatrix R13 = P23 * R12 * P23;
    return R12 * R13 * R23 == R23 * R13 * R12;
  }

  bool reflection_check(RepData const& data) {
    data.validate();
    std::size_t d = data.d, m = data.m;
    QMatrix     P12   = pad(QMatrix::flip(d), m, 1);
    QMatrix     K1    = pad(data.K, 1, d);
    QMatrix     K2    = P12 * K1 * P12;
    QMatrix     R12   = pad(data.R, m, 1);
    QMatrix     Rp12  = pad(data.Rphi, m, 1);
    QMatrix     Rp21  = P12 * Rp12 * P12;
    QMatrix     Rpp21 = P12 * pad(data.Rphiphi, m, 1) * P12;
    return K1 * Rp21 * K2 * R12 == Rpp21 * K2 * Rp12 * K1;
  }

  ////////////////////////////////////////////////////////////////////////
  // cylinder representation
  ////////////////////////////////////////////////////////////////////////

  QMatrix CylRep::eval(CylBraidWord const& w) const {
    if (w.strand_count() != _n) {
      throw ArityError("word on " + std::to_string(w.strand_count())
                       + " strands for a representation on " + std::to_string(_n));
    }
    std::size_t d = _data.d, m = _data.m;
    QMatrix     acc = QMatrix::identity(_dim);
    for (auto const& l : w.letters()) {
      QMatrix full;
      if (l.kind == CylLetter::Kind::kappa) {
        full = pad(l.exponent > 0 ? _kappa : _kappa_inv, 1,
                   ipow(d, static_cast<std::size_t>(_n - 1)));
      } else {
        auto i = static_cast<std::size_t>(l.index);
        full   = pad(l.exponent > 0 ? _sigma : _sigma_inv, m * ipow(d, i - 1),
                     ipow(d, static_cast<std::size_t>(_n) - i - 1));
      }
      acc = full * acc;
    }
    return acc;
  }

  QMatrix CylRep::eval(BraidWord const& w) const {
    return eval(CylBraidWord(w));
  }

  CylRep build_cyl_rep(RepData const& data, int n) {
    if (n < 1) {
      throw PreconditionError("build_cyl_rep needs n >= 1");
    }
    data.validate();
    CylRep rep;
    rep._data      = data;
    rep._n         = n;
    rep._dim       = data.m * ipow(data.d, static_cast<std::size_t>(n));
    rep._sigma     = QMatrix::flip(data.d) * data.R;
    rep._sigma_inv = rep._sigma.inverse();
    rep._kappa     = pad(data.T.inverse(), data.m, 1) * data.K;
    rep._kappa_inv = rep._kappa.inverse();

    auto rel = [&](std::string const& lhs, std::string const& rhs) {
      if (rep.eval(CylBraidWord::parse(lhs, n)) != rep.eval(CylBraidWord::parse(rhs, n))) {
        throw RelationError("relation " + lhs + " = " + rhs + " fails on "
                            + std::to_string(n) + " strands");
      }
    };
    auto s = [](int i) { return "s" + std::to_string(i); };
    for (int i = 1; i + 1 < n; ++i) {
      rel(s(i) + " " + s(i + 1) + " " + s(i), s(i + 1) + " " + s(i) + " " + s(i + 1));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        rel(s(i) + " " + s(j), s(j) + " " + s(i));
      }
    }
    if (n >= 2) {
      rel("s1 k s1 k", "k s1 k s1");
    }
    for (int i = 2; i < n; ++i) {
      rel(s(i) + " k", "k " + s(i));
    }
    return rep;
  }

  QMatrix eval_braid(CylRep const& rep, CylBraidWord const& w) {
    return rep.eval(w);
  }

  QMatrix eval_braid(CylRep const& rep, BraidWord const& w) {
    return rep.eval(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // colored evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Legs {
      bool             module = false;
      std::vector<int> colors;
    };

    struct Local {
      std::array<std::array<QMatrix, 2>, 2> rhat, rhat_inv;  // by colors
      std::array<QMatrix, 2>                kap, kap_inv;    // by color

      explicit Local(RepData const& data) {
        QMatrix P = QMatrix::flip(data.d);
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            QMatrix const& R = a == 0 && b == 0 ? data.R
                               : a == 1 && b == 1 ? data.Rphiphi
                                                  : data.Rphi;
            rhat[a][b]     = P * R;
            rhat_inv[a][b] = rhat[a][b].inverse();
          }
        }
        QMatrix T = pad(data.T, data.m, 1);
        kap[0]    = data.K;
        kap[1]    = T * data.K * T.inverse();
        for (int c = 0; c < 2; ++c) {
          kap_inv[c] = kap[c].inverse();
        }
      }
    };

    QMatrix eval_legs(RepData const& data, Local const& loc, CylBraidWord const& w,
                      Legs legs) {
      std::size_t d = data.d;
      std::size_t mdim = legs.module ? data.m : 1;
      auto        n    = legs.colors.size();
      if (static_cast<int>(n) != w.strand_count()) {
        throw ArityError("colored evaluation: word on " + std::to_string(w.strand_count())
                         + " strands, start has " + std::to_string(n));
      }
      QMatrix acc = QMatrix::identity(mdim * ipow(d, n));
      for (auto const& l : w.letters()) {
        auto& c = legs.colors;
        QMatrix full;
        if (l.kind == CylLetter::Kind::kappa) {
          if (!legs.module) {
            throw TypingError("kappa letter without a module strand");
          }
          int col = c[0];
          full    = pad(l.exponent > 0 ? loc.kap[col] : loc.kap_inv[1 - col], 1,
                        ipow(d, n - 1));
          c[0]    = 1 - col;
        } else {
          auto i = static_cast<std::size_t>(l.index);
          int  a = c[i - 1], b = c[i];
          QMatrix const& local = l.exponent > 0 ? loc.rhat[a][b] : loc.rhat_inv[b][a];
          full = pad(local, mdim * ipow(d, i - 1), ipow(d, n - i - 1));
          std::swap(c[i - 1], c[i]);
        }
        acc = full * acc;
      }
      return acc;
    }

    void collect_legs(ObjectExpr const& o, int flip, Legs& out) {
      using K = ObjectExpr::Kind;
      switch (o.kind()) {
        case K::generator:
          out.colors.push_back(flip);
          break;
        case K::unit:
          break;
        case K::module:
        case K::module_unit:
          out.module = true;
          break;
        case K::phi:
          collect_legs(o.child(0), 1 - flip, out);
          break;
        case K::tensor:
        case K::act:
          collect_legs(o.child(0), flip, out);
          collect_legs(o.child(1), flip, out);
          break;
      }
    }

    Legs legs_of(ObjectExpr const& o, int flip) {
      Legs l;
      collect_legs(o, flip, l);
      return l;
    }

    class MorEvaluator {
     public:
      explicit MorEvaluator(RepData const& data) : _data(data), _loc(data) {
        if (_data.theta) {
          _theta     = *_data.theta;
          _theta_inv = _data.theta->inverse();
        } else if (!(_data.T * _data.T).is_identity()) {
          _t_missing = true;
        }
      }

      QMatrix eval(MorExpr const& f, int flip, bool inverse) {
        using MK = MorExpr::Kind;
        switch (f.kind()) {
          case MK::identity:
            return QMatrix::identity(dim(legs_of(f.domain(), flip)));
          case MK::generator:
            return generator(f, flip, inverse);
          case MK::inverse:
            return eval(f.child(0), flip, !inverse);
          case MK::vert: {
            QMatrix a = eval(f.child(0), flip, inverse);
            QMatrix b = eval(f.child(1), flip, inverse);
            return inverse ? b * a : a * b;
          }
          case MK::tens:
          case MK::act:
            return kron(eval(f.child(0), flip, inverse), eval(f.child(1), flip, inverse));
          case MK::phi:
            return eval(f.child(0), 1 - flip, inverse);
          case MK::horiz:
            return eval(f.desugared(), flip, inverse);
        }
        throw Error("unreachable");
      }

     private:
      RepData const& _data;
      Local          _loc;
      QMatrix        _theta, _theta_inv;
      bool           _t_missing = false;

      std::size_t dim(Legs const& l) const {
        return (l.module ? _data.m : 1) * ipow(_data.d, l.colors.size());
      }

      QMatrix generator(MorExpr const& g, int flip, bool inverse) {
        using G = GenKind;
        // start state of the map actually applied
        Legs start = legs_of(inverse ? g.codomain() : g.domain(), flip);
        switch (g.generator()) {
          case G::alpha:
          case G::lambda:
          case G::rho:
          case G::a:
          case G::r:
          case G::phi0:
            return QMatrix::identity(dim(start));
          case G::t: {
            if (_t_missing) {
              throw PreconditionError(
                  "t needs a balancing matrix theta when T^2 is not the identity");
            }
            // theta on each leaf, extended through the normalizers
            ObjectExpr const& a  = g.params()[0];
            ObjectExpr        aa = ObjectExpr::phi(ObjectExpr::phi(a));
            QMatrix           mid = QMatrix::identity(1);
            for (std::size_t i = 0; i < start.colors.size(); ++i) {
              mid = kron(mid, !_data.theta ? QMatrix::identity(_data.d)
                              : inverse    ? _theta_inv
                                           : _theta);
            }
            QMatrix to_nf   = eval(normalizer(inverse ? a : aa), flip, false);
            QMatrix from_nf = eval(normalizer(inverse ? aa : a), flip, true);
            return from_nf * mid * to_nf;
          }
          case G::sigma:
          case G::kappa: {
            CylBraidWord w = underlying_braid(g);
            return eval_legs(_data, _loc, inverse ? w.inverse() : w, start);
          }
          case G::phi2: {
            auto const& p = g.params();
            MorExpr     s = MorExpr::gen(G::sigma, {ObjectExpr::phi(p[1]),
                                                    ObjectExpr::phi(p[0])});
            CylBraidWord w = underlying_braid(s);
            return eval_legs(_data, _loc, inverse ? w : w.inverse(), start);
          }
        }
        throw Error("unreachable");
      }
    };
  }  // namespace

  QMatrix eval_colored(RepData const& data, CylBraidWord const& w,
                       SignedSignature const& start) {
    data.validate();
    Legs l;
    l.module = start.marker != SignedSignature::Marker::none;
    for (auto const& leaf : start.leaves) {
      l.colors.push_back(leaf.eps);
    }
    return eval_legs(data, Local(data), w, l);
  }

  QMatrix eval_mor(RepData const& data, MorExpr const& f) {
    data.validate();
    f.require_typed();
    MorExpr whole = MorExpr::vert(
        normalizer(f.codomain()),
        MorExpr::vert(f, MorExpr::inv(normalizer(f.domain()))));
    MorEvaluator ev(data);
    return ev.eval(normalize_presentation(whole), 0, false);
  }

}  // namespace orbibraid
