#ifndef ORBIBRAID_COHERENCE_HPP_
#define ORBIBRAID_COHERENCE_HPP_

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "orbibraid/braid.hpp"
#include "orbibraid/dsl.hpp"
#include "orbibraid/garside.hpp"
#include "orbibraid/morphisms.hpp"
#include "orbibraid/operad.hpp"

namespace orbibraid {

  // Underlying braid as a cylinder word (no kappa letters for A-typed f).
  // sigma(A, B) crosses the |A| strands of A over the |B| strands of B;
  // kappa(P, Y) carries the strands of Y once around the pole and past the
  // strands of P.
  CylBraidWord underlying_braid(MorExpr const& f);

  // BraidWord for A-typed f, CylBraidWord for M-typed f.
  std::variant<BraidWord, CylBraidWord> extract_braid(MorExpr const& f);

  enum class Status { commutes, not_commutes, not_parallel };
  std::string to_string(Status s);

  struct Verdict {
    Status          status = Status::commutes;
    Flavor          flavor = Flavor::braided;
    bool            cylinder = false;
    SignedSignature lhs_domain, lhs_codomain, rhs_domain, rhs_codomain;
    // extracted from the normalized presentations, and from the raw terms
    CylBraidWord lhs_word, rhs_word, lhs_raw, rhs_raw;
    // normal forms of the words (of their images in B_{n+1} for cylinder
    // words); empty when not parallel
    std::optional<GarsideNF> lhs_nf, rhs_nf;

    nlohmann::json to_json() const;
  };

  // Throws FlavorError for a monoidal diagram mentioning sigma or kappa.
  Verdict check(MorExpr const& lhs, MorExpr const& rhs, Flavor flavor);
  Verdict check(Diagram const& d);

  // Moves a D-input configuration along a braid: sigma_i swaps the inputs at
  // positions i and i+1, kappa flips eps of the input at position 1.
  SignedOp braid_of_signed_path(SignedOp const& start, CylBraidWord const& w);
  SignedOp braid_of_signed_path(SignedOp const& start, BraidWord const& w);

  // The signed permutation of the underlying braid carries the domain
  // signature to the codomain signature.
  bool endpoint_consistent(MorExpr const& f);

}  // namespace orbibraid

#endif  // ORBIBRAID_COHERENCE_HPP_
