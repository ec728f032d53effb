#ifndef ORBIBRAID_REFLECTION_HPP_
#define ORBIBRAID_REFLECTION_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "orbibraid/braid.hpp"
#include "orbibraid/morphisms.hpp"
#include "orbibraid/objects.hpp"
#include "orbibraid/qmatrix.hpp"

namespace orbibraid {

  // Matrix data for one object V (dim d) and one module object M (dim m).
  struct RepData {
    std::size_t d = 1;
    std::size_t m = 1;
    QMatrix     R;        // d^2 x d^2
    QMatrix     Rphi;     // (phi (x) 1)(R)
    QMatrix     Rphiphi;  // (phi (x) phi)(R)
    QMatrix     K;        // md x md, legs M (x) V
    QMatrix     T;        // d x d, phi on V is conjugation by T
    std::optional<QMatrix> theta;  // balancing used for t, d x d

    // Shapes, invertibility (exact determinant), and
    // Rphi = (T(x)1) R (T(x)1)^-1, Rphiphi = (T(x)T) R (T(x)T)^-1.
    // Throws PreconditionError.
    void validate() const;

    // R, Rphi, Rphiphi default to R; T to the identity.
    static RepData make(std::size_t d, std::size_t m, QMatrix R, QMatrix K,
                        std::optional<QMatrix> T = {}, std::optional<QMatrix> Rphi = {},
                        std::optional<QMatrix> Rphiphi = {});

    // The built-in sl2 sample: unnormalized R on C^2, K = [[q - q^-1, q], [1, 0]];
    // twisted: T = diag(1, -1) and K = T * that.
    static RepData sl2(bool twisted = false);
  };

  QMatrix sl2_r_matrix();

  // R12 R13 R23 = R23 R13 R12.
  bool yang_baxter_check(QMatrix const& R);

  // K1 Rphi21 K2 R12 = Rphiphi21 K2 Rphi12 K1 on M (x) V1 (x) V2, with
  // K2 = P12 K1 P12.
  bool reflection_check(RepData const& data);

  // sigma_i -> id_M (x) id^(i-1) (x) P R (x) id^(n-i-1), kappa -> (1 (x) T^-1) K
  // on the M (x) V1 legs.
  class CylRep {
   public:
    RepData const& data() const noexcept {
      return _data;
    }
    int strand_count() const noexcept {
      return _n;
    }
    std::size_t dimension() const noexcept {
      return _dim;
    }
    QMatrix eval(CylBraidWord const& w) const;
    QMatrix eval(BraidWord const& w) const;

   private:
    friend CylRep build_cyl_rep(RepData const& data, int n);
    RepData _data;
    int     _n   = 1;
    std::size_t _dim = 1;
    QMatrix _sigma, _sigma_inv, _kappa, _kappa_inv;  // local operators
  };

  // Throws RelationError naming the first violated relation.
  CylRep  build_cyl_rep(RepData const& data, int n);
  QMatrix eval_braid(CylRep const& rep, CylBraidWord const& w);
  QMatrix eval_braid(CylRep const& rep, BraidWord const& w);

  // Colored evaluation: strands carry eps from start; sigma uses R, Rphi or
  // Rphiphi by the colors it crosses, kappa uses K or (1 (x) T) K (1 (x) T)^-1
  // and flips the color of strand 1.
  QMatrix eval_colored(RepData const& data, CylBraidWord const& w,
                       SignedSignature const& start);

  // Every A-leaf is V, M and oneM are M. sigma -> P R, kappa -> K (colored as
  // above), Phi2_{A,B} -> inverse braiding of Phi(B) past Phi(A), Phi on
  // morphisms keeps the linear map, structure maps are identities, t is
  // theta on every leg (identity if no theta and T^2 = 1). The result is
  // expressed in the signature order of domain and codomain.
  QMatrix eval_mor(RepData const& data, MorExpr const& f);

}  // namespace orbibraid

#endif  // ORBIBRAID_REFLECTION_HPP_
