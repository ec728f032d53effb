#ifndef ORBIBRAID_LAWRENCE_KRAMMER_HPP_
#define ORBIBRAID_LAWRENCE_KRAMMER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbibraid/braid.hpp"

namespace orbibraid {

  // Integer Laurent polynomial in two commuting variables q, t.
  class Poly2 {
   public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    Poly2() = default;
    Poly2(std::int64_t c, int qexp = 0, int texp = 0);

    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::map<Key, std::int64_t> const& terms() const noexcept {
      return _terms;
    }

    Poly2& operator+=(Poly2 const& o);
    Poly2& operator-=(Poly2 const& o);
    Poly2  operator+(Poly2 const& o) const;
    Poly2  operator-(Poly2 const& o) const;
    Poly2  operator-() const;
    Poly2  operator*(Poly2 const& o) const;
    // Exact division by an integer; throws if not exact.
    Poly2 divided_by(std::int64_t d) const;
    // Exact division by a monomial c q^a t^b with c = +1 or -1.
    Poly2 divided_by_unit(Poly2 const& unit) const;
    bool  is_unit_monomial() const noexcept;

    std::string to_string() const;

    friend bool operator==(Poly2 const&, Poly2 const&) = default;

   private:
    void add_term(Key k, std::int64_t c);

    std::map<Key, std::int64_t> _terms;
  };

  class LKMatrix {
   public:
    LKMatrix() = default;
    explicit LKMatrix(std::size_t dim);
    static LKMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept {
      return _dim;
    }
    Poly2 const& at(std::size_t r, std::size_t c) const {
      return _entries[r * _dim + c];
    }
    Poly2& at(std::size_t r, std::size_t c) {
      return _entries[r * _dim + c];
    }

    LKMatrix operator*(LKMatrix const& o) const;
    bool     is_identity() const;

    friend bool operator==(LKMatrix const&, LKMatrix const&) = default;

   private:
    std::size_t        _dim = 0;
    std::vector<Poly2> _entries;
  };

  // Matrix of sigma_k (exponent +1 or -1) on n strands, dimension n(n-1)/2.
  LKMatrix lk_generator(int n, int k, int exponent);

  // lk_matrix(u * v) == lk_matrix(u) * lk_matrix(v)
  LKMatrix lk_matrix(BraidWord const& w);

}  // namespace orbibraid

#endif  // ORBIBRAID_LAWRENCE_KRAMMER_HPP_
