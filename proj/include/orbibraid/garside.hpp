#ifndef ORBIBRAID_GARSIDE_HPP_
#define ORBIBRAID_GARSIDE_HPP_

#include <string>
#include <vector>

#include "orbibraid/braid.hpp"
#include "orbibraid/permutation.hpp"

namespace orbibraid {

  // Delta^infimum * factors[0] * factors[1] * ..., each factor a permutation
  // braid. A factor p sends the strand starting at position k to p[k].
  struct GarsideNF {
    int                      strand_count = 1;
    int                      infimum      = 0;
    std::vector<Permutation> factors;

    bool is_trivial() const noexcept {
      return infimum == 0 && factors.empty();
    }
    // e.g. "p=-1 factors=[312]"
    std::string to_string() const;

    friend bool operator==(GarsideNF const&, GarsideNF const&) = default;
  };

  GarsideNF garside_nf(BraidWord const& w);

  // A word representing the normal form; renormalizing it gives back nf.
  BraidWord to_word(GarsideNF const& nf);

  // Positive word for a single permutation braid.
  BraidWord permutation_braid_word(Permutation const& p);

  bool braid_eq(BraidWord const& u, BraidWord const& v);
  bool cyl_braid_eq(CylBraidWord const& u, CylBraidWord const& v);

  // Normal form of the image under embed_cyl.
  GarsideNF cyl_garside_nf(CylBraidWord const& w);

}  // namespace orbibraid

#endif  // ORBIBRAID_GARSIDE_HPP_
