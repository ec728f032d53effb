#ifndef ORBIBRAID_PERMUTATION_HPP_
#define ORBIBRAID_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace orbibraid {

  // A permutation of {0, ..., n-1} stored by images: p[i] is the image of i.
  // Text form is 1-based one-line notation, e.g. "312".
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);
    // Swaps i and j, fixing everything else.
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    int operator[](std::size_t i) const {
      return _images[i];
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    // (a.then(b))[i] == b[a[i]]
    Permutation then(Permutation const& b) const;

    // 1-based one-line notation; degrees >= 10 are comma separated.
    std::string to_string() const;
    static Permutation parse(std::string const& text);

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  // All permutations of degree n in lexicographic order of images.
  std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace orbibraid

#endif  // ORBIBRAID_PERMUTATION_HPP_
