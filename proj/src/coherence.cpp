#include "orbibraid/coherence.hpp"

#include "orbibraid/error.hpp"
#include "orbibraid/normalize.hpp"

namespace orbibraid {

  namespace {
    // |a| strands crossing over the |b| strands to their right, at offset 0
    std::vector<CylLetter> sigma_block(int p, int q) {
      std::vector<CylLetter> out;
      for (int i = p; i >= 1; --i) {
        for (int k = i; k < i + q; ++k) {
          out.push_back(CylLetter::sigma(k));
        }
      }
      return out;
    }

    // j strands next to the pole, k strands wound around it
    std::vector<CylLetter> kappa_block(int j, int k) {
      std::vector<CylLetter> out;
      for (int s = k; s >= 1; --s) {
        for (int i = j; i >= 1; --i) {
          out.push_back(CylLetter::sigma(i));
        }
        out.push_back(CylLetter::kappa());
        for (int i = 1; i <= j; ++i) {
          out.push_back(CylLetter::sigma(i));
        }
        for (int i = j + 1; i < j + s; ++i) {
          out.push_back(CylLetter::sigma(i));
        }
      }
      return out;
    }

    CylBraidWord side_by_side(CylBraidWord const& x, CylBraidWord const& y) {
      int n = x.strand_count() + y.strand_count();
      return x.shifted(0, n) * y.shifted(x.strand_count(), n);
    }

    CylBraidWord mirrored(CylBraidWord const& w) {
      std::vector<CylLetter> v = w.letters();
      for (auto& l : v) {
        if (l.is_kappa()) {
          throw TypingError("phi of an M-typed morphism");
        }
        l.index = w.strand_count() - l.index;
      }
      return CylBraidWord(w.strand_count(), std::move(v));
    }
  }  // namespace

  CylBraidWord underlying_braid(MorExpr const& f) {
    using MK = MorExpr::Kind;
    f.require_typed();
    int n = static_cast<int>(f.strand_count());
    switch (f.kind()) {
      case MK::identity:
        return CylBraidWord(n);
      case MK::generator: {
        auto const& p = f.params();
        if (f.generator() == GenKind::sigma) {
          return CylBraidWord(n, sigma_block(static_cast<int>(p[0].leaf_count()),
                                             static_cast<int>(p[1].leaf_count())));
        }
        if (f.generator() == GenKind::kappa) {
          return CylBraidWord(n, kappa_block(static_cast<int>(p[0].leaf_count()),
                                             static_cast<int>(p[1].leaf_count())));
        }
        return CylBraidWord(n);
      }
      case MK::inverse:
        return underlying_braid(f.child(0)).inverse();
      case MK::vert:
        return underlying_braid(f.child(1)) * underlying_braid(f.child(0));
      case MK::tens:
      case MK::act:
        return side_by_side(underlying_braid(f.child(0)),
                            underlying_braid(f.child(1)));
      case MK::phi:
        return mirrored(underlying_braid(f.child(0)));
      case MK::horiz:
        return underlying_braid(f.desugared());
    }
    return CylBraidWord(n);
  }

  std::variant<BraidWord, CylBraidWord> extract_braid(MorExpr const& f) {
    CylBraidWord w = underlying_braid(f);
    if (f.module_typed()) {
      return w;
    }
    std::vector<BraidLetter> v;
    for (auto const& l : w.letters()) {
      v.push_back({l.index, l.exponent});
    }
    return BraidWord(w.strand_count(), std::move(v));
  }

  std::string to_string(Status s) {
    switch (s) {
      case Status::commutes:
        return "COMMUTES";
      case Status::not_commutes:
        return "NOT_COMMUTES";
      case Status::not_parallel:
        return "NOT_PARALLEL";
    }
    return "";
  }

  namespace {
    GarsideNF nf_of(CylBraidWord const& w, bool cylinder) {
      if (cylinder) {
        return cyl_garside_nf(w);
      }
      std::vector<BraidLetter> v;
      for (auto const& l : w.letters()) {
        v.push_back({l.index, l.exponent});
      }
      return garside_nf(BraidWord(w.strand_count(), std::move(v)));
    }

    std::vector<int> winding_parities(CylBraidWord const& w) {
      auto v = pole_windings(w);
      for (auto& x : v) {
        x = ((x % 2) + 2) % 2;
      }
      return v;
    }
  }  // namespace

  Verdict check(MorExpr const& lhs, MorExpr const& rhs, Flavor flavor) {
    if (flavor == Flavor::monoidal && (lhs.braided() || rhs.braided())) {
      throw FlavorError("a monoidal diagram cannot mention sigma or kappa");
    }
    Verdict v;
    v.flavor       = flavor;
    v.cylinder     = lhs.module_typed();
    v.lhs_domain   = signature(lhs.domain());
    v.lhs_codomain = signature(lhs.codomain());
    v.rhs_domain   = signature(rhs.domain());
    v.rhs_codomain = signature(rhs.codomain());
    v.lhs_raw      = underlying_braid(lhs);
    v.rhs_raw      = underlying_braid(rhs);
    if (v.lhs_domain != v.rhs_domain || v.lhs_codomain != v.rhs_codomain) {
      v.status   = Status::not_parallel;
      v.lhs_word = v.lhs_raw;
      v.rhs_word = v.rhs_raw;
      return v;
    }
    v.lhs_word = underlying_braid(normalize_presentation(lhs));
    v.rhs_word = underlying_braid(normalize_presentation(rhs));
    v.lhs_nf   = nf_of(v.lhs_word, v.cylinder);
    v.rhs_nf   = nf_of(v.rhs_word, v.cylinder);
    bool same  = true;
    switch (flavor) {
      case Flavor::monoidal:
        same = true;
        break;
      case Flavor::braided:
        same = *v.lhs_nf == *v.rhs_nf;
        break;
      case Flavor::symmetric:
        same = v.lhs_word.permutation() == v.rhs_word.permutation()
               && winding_parities(v.lhs_word) == winding_parities(v.rhs_word);
        break;
    }
    v.status = same ? Status::commutes : Status::not_commutes;
    return v;
  }

  Verdict check(Diagram const& d) {
    return check(d.lhs, d.rhs, d.flavor);
  }

  nlohmann::json Verdict::to_json() const {
    nlohmann::json j;
    j["status"] = to_string(status);
    j["flavor"] = to_string(flavor);
    j["lhs_nf"] = lhs_nf ? nlohmann::json(lhs_nf->to_string()) : nlohmann::json();
    j["rhs_nf"] = rhs_nf ? nlohmann::json(rhs_nf->to_string()) : nlohmann::json();
    j["braid_words"] = {{"strands", lhs_raw.strand_count()},
                        {"cylinder", cylinder},
                        {"lhs", lhs_word.to_string()},
                        {"rhs", rhs_word.to_string()},
                        {"lhs_raw", lhs_raw.to_string()},
                        {"rhs_raw", rhs_raw.to_string()}};
    if (status == Status::not_parallel) {
      j["signatures"] = {{"lhs_domain", lhs_domain.to_string()},
                         {"lhs_codomain", lhs_codomain.to_string()},
                         {"rhs_domain", rhs_domain.to_string()},
                         {"rhs_codomain", rhs_codomain.to_string()}};
    }
    return j;
  }

  SignedOp braid_of_signed_path(SignedOp const& start, CylBraidWord const& w) {
    if (static_cast<std::size_t>(w.strand_count()) != start.d_arity()) {
      throw ArityError("braid on " + std::to_string(w.strand_count())
                       + " strands applied to an operation with "
                       + std::to_string(start.d_arity()) + " D-inputs");
    }
    if (w.has_kappa() && start.output() != Color::Dstar) {
      throw TypingError("kappa moves disks around the fixed point of Dstar only");
    }
    std::vector<int> eps  = start.eps();
    std::vector<int> perm = start.perm().images();
    for (auto const& l : w.letters()) {
      if (l.is_kappa()) {
        eps[perm[0]] ^= 1;
      } else {
        std::swap(perm[l.index - 1], perm[l.index]);
      }
    }
    return SignedOp(start.output(), start.inputs(), std::move(eps),
                    Permutation(std::move(perm)));
  }

  SignedOp braid_of_signed_path(SignedOp const& start, BraidWord const& w) {
    return braid_of_signed_path(start, CylBraidWord(w));
  }

  bool endpoint_consistent(MorExpr const& f) {
    auto         dom = signature(f.domain()).leaves;
    auto         cod = signature(f.codomain()).leaves;
    CylBraidWord w   = underlying_braid(f);
    if (dom.size() != cod.size()
        || static_cast<std::size_t>(w.strand_count()) != dom.size()) {
      return false;
    }
    for (auto const& l : w.letters()) {
      if (l.is_kappa()) {
        dom[0].eps ^= 1;
      } else {
        std::swap(dom[l.index - 1], dom[l.index]);
      }
    }
    return dom == cod;
  }

}  // namespace orbibraid
