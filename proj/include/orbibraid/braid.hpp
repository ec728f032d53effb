#ifndef ORBIBRAID_BRAID_HPP_
#define ORBIBRAID_BRAID_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "orbibraid/permutation.hpp"

namespace orbibraid {

  // sigma_index^exponent, 1 <= index <= n-1, exponent = +1 or -1.
  // A positive letter crosses the strand at position index OVER the strand at
  // position index+1.
  struct BraidLetter {
    int index;
    int exponent;

    friend bool operator==(BraidLetter const&, BraidLetter const&) = default;
  };

  // A word in the Artin generators of B_n. Words are read left to right in
  // time: the first letter happens first.
  class BraidWord {
   public:
    explicit BraidWord(int strand_count = 1, std::vector<BraidLetter> letters = {});

    int strand_count() const noexcept {
      return _strands;
    }
    std::vector<BraidLetter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    BraidWord inverse() const;
    // Concatenation u then v; throws ArityError on strand mismatch.
    BraidWord operator*(BraidWord const& v) const;
    // The same word viewed on more strands, indices shifted by `offset`.
    BraidWord shifted(int offset, int strand_count) const;
    // sigma_i -> sigma_{n-i}, exponents kept.
    BraidWord mirrored() const;

    // Strand starting at position i ends at position result[i].
    Permutation permutation() const;

    // Space separated tokens s<i> / S<i>; "1" for the empty word.
    std::string to_string() const;
    static BraidWord parse(std::string const& text, int strand_count);

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    int                      _strands;
    std::vector<BraidLetter> _letters;
  };

  struct CylLetter {
    enum class Kind { sigma, kappa };
    Kind kind;
    int  index;  // 0 for kappa
    int  exponent;

    static CylLetter sigma(int i, int e = 1) {
      return {Kind::sigma, i, e};
    }
    static CylLetter kappa(int e = 1) {
      return {Kind::kappa, 0, e};
    }
    bool is_kappa() const noexcept {
      return kind == Kind::kappa;
    }

    friend bool operator==(CylLetter const&, CylLetter const&) = default;
  };

  // A word in the generators sigma_1..sigma_{n-1}, kappa of the cylinder
  // braid group. kappa winds the strand at position 1 once around the pole.
  class CylBraidWord {
   public:
    explicit CylBraidWord(int strand_count = 1, std::vector<CylLetter> letters = {});
    // A braid word without kappa letters.
    explicit CylBraidWord(BraidWord const& w);

    int strand_count() const noexcept {
      return _strands;
    }
    std::vector<CylLetter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    CylBraidWord inverse() const;
    CylBraidWord operator*(CylBraidWord const& v) const;
    CylBraidWord shifted(int offset, int strand_count) const;

    bool has_kappa() const noexcept;
    Permutation permutation() const;

    // Tokens s<i>, S<i>, k, K; "1" for the empty word.
    std::string to_string() const;
    static CylBraidWord parse(std::string const& text, int strand_count);

    friend bool operator==(CylBraidWord const&, CylBraidWord const&) = default;

   private:
    int                    _strands;
    std::vector<CylLetter> _letters;
  };

  // The annular embedding B^cyl_n -> B_{n+1}: kappa^e -> sigma_1^{2e},
  // sigma_i^e -> sigma_{i+1}^e. The pole becomes strand 1.
  BraidWord embed_cyl(CylBraidWord const& w);

  // Signed number of kappa letters applied while the strand that starts at
  // position `strand` (1-based) sits at position 1.
  int pole_winding(CylBraidWord const& w, int strand);
  // pole_winding for every strand, indexed by starting position (0-based).
  std::vector<int> pole_windings(CylBraidWord const& w);

}  // namespace orbibraid

#endif  // ORBIBRAID_BRAID_HPP_
