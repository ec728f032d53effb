#include "orbibraid/lawrence_krammer.hpp"

#include <mutex>
#include <tuple>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw Error("Lawrence-Krammer coefficient overflow");
      }
      return r;
    }

    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw Error("Lawrence-Krammer coefficient overflow");
      }
      return r;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Poly2
  ////////////////////////////////////////////////////////////////////////

  Poly2::Poly2(std::int64_t c, int qexp, int texp) {
    add_term({qexp, texp}, c);
  }

  void Poly2::add_term(Key k, std::int64_t c) {
    if (c == 0) {
      return;
    }
    auto it = _terms.find(k);
    if (it == _terms.end()) {
      _terms.emplace(k, c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  Poly2& Poly2::operator+=(Poly2 const& o) {
    for (auto const& [k, c] : o._terms) {
      add_term(k, c);
    }
    return *this;
  }

  Poly2& Poly2::operator-=(Poly2 const& o) {
    for (auto const& [k, c] : o._terms) {
      add_term(k, checked_mul(c, -1));
    }
    return *this;
  }

  Poly2 Poly2::operator+(Poly2 const& o) const {
    Poly2 r = *this;
    return r += o;
  }

  Poly2 Poly2::operator-(Poly2 const& o) const {
    Poly2 r = *this;
    return r -= o;
  }

  Poly2 Poly2::operator-() const {
    return Poly2() - *this;
  }

  Poly2 Poly2::operator*(Poly2 const& o) const {
    Poly2 r;
    for (auto const& [k1, c1] : _terms) {
      for (auto const& [k2, c2] : o._terms) {
        r.add_term({k1.first + k2.first, k1.second + k2.second},
                   checked_mul(c1, c2));
      }
    }
    return r;
  }

  Poly2 Poly2::divided_by(std::int64_t d) const {
    Poly2 r;
    for (auto const& [k, c] : _terms) {
      if (c % d != 0) {
        throw Error("inexact division");
      }
      r._terms.emplace(k, c / d);
    }
    return r;
  }

  bool Poly2::is_unit_monomial() const noexcept {
    return _terms.size() == 1
           && (_terms.begin()->second == 1 || _terms.begin()->second == -1);
  }

  Poly2 Poly2::divided_by_unit(Poly2 const& unit) const {
    if (!unit.is_unit_monomial()) {
      throw Error("not a unit monomial");
    }
    auto [k0, c0] = *unit._terms.begin();
    Poly2 r;
    for (auto const& [k, c] : _terms) {
      r._terms.emplace(Key{k.first - k0.first, k.second - k0.second}, c * c0);
    }
    return r;
  }

  std::string Poly2::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, c] : _terms) {
      if (!out.empty()) {
        out += (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        out += "-";
      }
      std::int64_t a = c < 0 ? -c : c;
      bool mono = k.first != 0 || k.second != 0;
      if (a != 1 || !mono) {
        out += std::to_string(a);
        if (mono) {
          out += '*';
        }
      }
      if (k.first != 0) {
        out += "q^" + std::to_string(k.first);
        if (k.second != 0) {
          out += '*';
        }
      }
      if (k.second != 0) {
        out += "t^" + std::to_string(k.second);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // LKMatrix
  ////////////////////////////////////////////////////////////////////////

  LKMatrix::LKMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim) {}

  LKMatrix LKMatrix::identity(std::size_t dim) {
    LKMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m.at(i, i) = Poly2(1);
    }
    return m;
  }

  LKMatrix LKMatrix::operator*(LKMatrix const& o) const {
    if (_dim != o._dim) {
      throw ArityError("matrix dimensions differ");
    }
    LKMatrix r(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t k = 0; k < _dim; ++k) {
        Poly2 const& a = at(i, k);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          Poly2 const& b = o.at(k, j);
          if (!b.is_zero()) {
            r.at(i, j) += a * b;
          }
        }
      }
    }
    return r;
  }

  bool LKMatrix::is_identity() const {
    return *this == identity(_dim);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // basis x_{ij}, 1 <= i < j <= n, in lexicographic order
    std::size_t basis_index(int n, int i, int j) {
      std::size_t idx = 0;
      for (int a = 1; a < i; ++a) {
        idx += n - a;
      }
      return idx + (j - i - 1);
    }

    LKMatrix positive_generator(int n, int k) {
      std::size_t dim = static_cast<std::size_t>(n) * (n - 1) / 2;
      LKMatrix    g(dim);
      Poly2 const one(1), q(1, 1), t(1, 0, 1);
      Poly2 const qm1 = q - one;
      auto        set = [&](int si, int sj, int ti, int tj, Poly2 const& c) {
        g.at(basis_index(n, ti, tj), basis_index(n, si, sj)) += c;
      };
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (i == k && j == k + 1) {
            set(i, j, k, k + 1, t * q * q);
          } else if (i < k && j == k) {
            set(i, j, i, k, one - q);
            set(i, j, i, k + 1, q);
          } else if (i < k && j == k + 1) {
            set(i, j, i, k, one);
            set(i, j, k, k + 1, t * Poly2(1, k - i + 1) * qm1);
          } else if (i == k && j > k + 1) {
            set(i, j, k, k + 1, t * q * qm1);
            set(i, j, k + 1, j, q);
          } else if (i == k + 1) {
            set(i, j, k, j, one);
            set(i, j, k + 1, j, one - q);
          } else if (j < k || i > k + 1) {
            set(i, j, i, j, one);
          } else {  // i < k < k + 1 < j
            set(i, j, i, j, one);
            set(i, j, k, k + 1, t * Poly2(1, k - i) * qm1 * qm1);
          }
        }
      }
      return g;
    }

    // Faddeev-LeVerrier; the determinant is a unit monomial.
    LKMatrix invert(LKMatrix const& a) {
      std::size_t n = a.dim();
      LKMatrix    m(n);
      Poly2       c(1);
      for (std::size_t k = 1; k <= n; ++k) {
        LKMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) {
          next.at(i, i) += c;
        }
        m          = std::move(next);
        LKMatrix am = a * m;
        Poly2    tr;
        for (std::size_t i = 0; i < n; ++i) {
          tr += am.at(i, i);
        }
        c = (-tr).divided_by(static_cast<std::int64_t>(k));
      }
      LKMatrix inv(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          inv.at(i, j) = (-m.at(i, j)).divided_by_unit(c);
        }
      }
      return inv;
    }
  }  // namespace

  LKMatrix lk_generator(int n, int k, int exponent) {
    if (k < 1 || k > n - 1) {
      throw MalformedWordError("generator index out of range");
    }
    static std::mutex                                    mtx;
    static std::map<std::tuple<int, int, int>, LKMatrix> cache;
    auto                                                 key = std::make_tuple(n, k, exponent);
    {
      std::lock_guard<std::mutex> lock(mtx);
      auto                        it = cache.find(key);
      if (it != cache.end()) {
        return it->second;
      }
    }
    LKMatrix g = positive_generator(n, k);
    if (exponent < 0) {
      g = invert(g);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, g);
    return g;
  }

  LKMatrix lk_matrix(BraidWord const& w) {
    int         n   = w.strand_count();
    std::size_t dim = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
    LKMatrix    m   = LKMatrix::identity(dim);
    for (auto const& l : w.letters()) {
      m = m * lk_generator(n, l.index, l.exponent);
    }
    return m;
  }

}  // namespace orbibraid
