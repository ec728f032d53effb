#ifndef ORBIBRAID_LAURENT_HPP_
#define ORBIBRAID_LAURENT_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbibraid {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Finite integer combination of powers q^k, k in Z.
  class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert
    static LaurentPoly monomial(Integer c, int exponent);
    static LaurentPoly q();

    bool is_zero() const noexcept {
      return _c.empty();
    }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept {
      return _c.size() == 1;
    }
    int low() const noexcept {
      return _low;
    }
    int high() const noexcept {
      return _low + static_cast<int>(_c.size()) - 1;
    }
    Integer        coeff(int exponent) const;
    Integer const& lowest_coeff() const {
      return _c.front();
    }
    Integer const& leading_coeff() const {
      return _c.back();
    }
    Integer content() const;

    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;
    LaurentPoly divided(Integer const& c) const;  // exact

    friend LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b);
    friend LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b);
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    friend bool        operator==(LaurentPoly const&, LaurentPoly const&) = default;

    Rational evaluate(Rational const& x) const;

    // "q - q^-1", "3*q^2 + 1", "0"
    std::string        to_string() const;
    static LaurentPoly parse(std::string const& text);

    // Exact quotient a / b in Z[q, q^-1]; b must divide a.
    static LaurentPoly exact_quotient(LaurentPoly const& a, LaurentPoly const& b);
    // Primitive gcd of a and b up to units (sign and q-powers), with
    // nonzero constant term and low() == 0.
    static LaurentPoly gcd(LaurentPoly const& a, LaurentPoly const& b);

   private:
    LaurentPoly(int low, std::vector<Integer> c);
    void trim();

    int                  _low = 0;
    std::vector<Integer> _c;
  };

  // Reduced fraction of Laurent polynomials. Canonical: the common q-power
  // and common content are removed, the denominator has low() == 0 and a
  // positive constant term, zero is 0/1.
  class LaurentScalar {
   public:
    LaurentScalar() : _den(1) {}
    LaurentScalar(long long c) : _num(c), _den(1) {}  // NOLINT
    LaurentScalar(LaurentPoly p) : _num(std::move(p)), _den(1) {  // NOLINT
      canonicalize();
    }
    LaurentScalar(LaurentPoly num, LaurentPoly den);

    static LaurentScalar q() {
      return LaurentScalar(LaurentPoly::q());
    }

    LaurentPoly const& numerator() const noexcept {
      return _num;
    }
    LaurentPoly const& denominator() const noexcept {
      return _den;
    }
    bool is_zero() const noexcept {
      return _num.is_zero();
    }
    bool is_one() const noexcept;

    LaurentScalar inverse() const;
    LaurentScalar operator-() const;

    friend LaurentScalar operator+(LaurentScalar const& a, LaurentScalar const& b);
    friend LaurentScalar operator-(LaurentScalar const& a, LaurentScalar const& b);
    friend LaurentScalar operator*(LaurentScalar const& a, LaurentScalar const& b);
    friend LaurentScalar operator/(LaurentScalar const& a, LaurentScalar const& b);
    LaurentScalar&       operator+=(LaurentScalar const& b) {
      return *this = *this + b;
    }
    LaurentScalar& operator*=(LaurentScalar const& b) {
      return *this = *this * b;
    }
    friend bool operator==(LaurentScalar const&, LaurentScalar const&) = default;

    // "q - q^-1" or "(q^2 + 1)/(q + 1)"
    std::string          to_string() const;
    static LaurentScalar parse(std::string const& text);

   private:
    void        canonicalize();
    LaurentPoly _num;
    LaurentPoly _den;
  };

  // Value at q = q0. Throws PreconditionError for q0 = 0 or a vanishing
  // denominator.
  Rational specialize(LaurentScalar const& x, Rational const& q0);

}  // namespace orbibraid

#endif  // ORBIBRAID_LAURENT_HPP_
