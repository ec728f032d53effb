#include "orbibraid/laurent.hpp"

#include <cctype>
#include <utility>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    Integer igcd(Integer a, Integer b) {
      if (a < 0) {
        a = -a;
      }
      if (b < 0) {
        b = -b;
      }
      while (b != 0) {
        Integer r = a % b;
        a         = std::move(b);
        b         = std::move(r);
      }
      return a;
    }

    // dense coefficient vectors, index = exponent, no trailing zeros
    using Dense = std::vector<Integer>;

    void strip(Dense& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    // pseudo-remainder of a by b
    Dense prem(Dense a, Dense const& b) {
      Integer const& lb = b.back();
      while (a.size() >= b.size()) {
        Integer     la    = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a) {
          x *= lb;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[i + shift] -= la * b[i];
        }
        strip(a);
      }
      return a;
    }

    Dense primitive(Dense a) {
      Integer g = 0;
      for (auto const& x : a) {
        g = igcd(g, x);
      }
      if (g > 1) {
        for (auto& x : a) {
          x /= g;
        }
      }
      if (!a.empty() && a.back() < 0) {
        for (auto& x : a) {
          x = -x;
        }
      }
      return a;
    }
  }  // namespace

  LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) {
      _c.push_back(Integer(c));
    }
  }

  LaurentPoly::LaurentPoly(int low, std::vector<Integer> c)
      : _low(low), _c(std::move(c)) {
    trim();
  }

  void LaurentPoly::trim() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
    std::size_t k = 0;
    while (k < _c.size() && _c[k] == 0) {
      ++k;
    }
    if (k > 0) {
      _c.erase(_c.begin(), _c.begin() + static_cast<std::ptrdiff_t>(k));
      _low += static_cast<int>(k);
    }
    if (_c.empty()) {
      _low = 0;
    }
  }

  LaurentPoly LaurentPoly::monomial(Integer c, int exponent) {
    return LaurentPoly(exponent, {std::move(c)});
  }

  LaurentPoly LaurentPoly::q() {
    return monomial(1, 1);
  }

  bool LaurentPoly::is_constant() const noexcept {
    return _c.empty() || (_c.size() == 1 && _low == 0);
  }

  Integer LaurentPoly::coeff(int e) const {
    if (e < _low || e > high()) {
      return 0;
    }
    return _c[static_cast<std::size_t>(e - _low)];
  }

  Integer LaurentPoly::content() const {
    Integer g = 0;
    for (auto const& x : _c) {
      g = igcd(g, x);
      if (g == 1) {
        break;
      }
    }
    return g;
  }

  LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) {
      r._low += k;
    }
    return r;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r._c) {
      x = -x;
    }
    return r;
  }

  LaurentPoly LaurentPoly::divided(Integer const& c) const {
    LaurentPoly r = *this;
    for (auto& x : r._c) {
      x /= c;
    }
    return r;
  }

  LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.is_zero()) {
      return b;
    }
    if (b.is_zero()) {
      return a;
    }
    int                  lo = std::min(a._low, b._low);
    int                  hi = std::max(a.high(), b.high());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      c[static_cast<std::size_t>(a._low - lo) + i] += a._c[i];
    }
    for (std::size_t i = 0; i < b._c.size(); ++i) {
      c[static_cast<std::size_t>(b._low - lo) + i] += b._c[i];
    }
    return LaurentPoly(lo, std::move(c));
  }

  LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b) {
    return a + (-b);
  }

  LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Integer> c(a._c.size() + b._c.size() - 1);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        c[i + j] += a._c[i] * b._c[j];
      }
    }
    return LaurentPoly(a._low + b._low, std::move(c));
  }

  Rational LaurentPoly::evaluate(Rational const& x) const {
    if (is_zero()) {
      return 0;
    }
    Rational acc = 0;
    for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
      acc = acc * x + Rational(*it);
    }
    Rational p = 1;
    int      e = _low < 0 ? -_low : _low;
    for (int i = 0; i < e; ++i) {
      p *= x;
    }
    if (_low < 0) {
      return acc / p;
    }
    return acc * p;
  }

  std::string LaurentPoly::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (int e = high(); e >= _low; --e) {
      Integer c = coeff(e);
      if (c == 0) {
        continue;
      }
      bool neg = c < 0;
      if (neg) {
        c = -c;
      }
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string power = e == 1 ? "q" : "q^" + std::to_string(e);
      if (e == 0) {
        out += c.str();
      } else if (c == 1) {
        out += power;
      } else {
        out += c.str() + "*" + power;
      }
    }
    return out;
  }

  namespace {
    struct PolyLexer {
      std::string const& s;
      std::size_t        i = 0;

      void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
      }
      bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
          ++i;
          return true;
        }
        return false;
      }
      bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
      }
      Integer integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (start == i) {
          fail("expected a number");
        }
        return Integer(s.substr(start, i - start));
      }
      [[noreturn]] void fail(std::string const& msg) {
        throw ParseError(msg + " in scalar '" + s + "'", 1, i + 1);
      }
    };

    // term := [int ['*']] ['q' ['^' ['-'] int]] with at least one part
    LaurentPoly parse_term(PolyLexer& lx) {
      Integer c    = 1;
      bool    has  = false;
      int     expo = 0;
      if (lx.peek_digit()) {
        c   = lx.integer();
        has = true;
        lx.eat('*');
      }
      if (lx.eat('q')) {
        expo = 1;
        has  = true;
        if (lx.eat('^')) {
          bool neg = lx.eat('-');
          if (!neg) {
            lx.eat('+');
          }
          Integer e = lx.integer();
          if (e > 100000) {
            lx.fail("exponent too large");
          }
          expo = static_cast<int>(e) * (neg ? -1 : 1);
        }
      }
      if (!has) {
        lx.fail("expected a term");
      }
      return LaurentPoly::monomial(c, expo);
    }

    LaurentPoly parse_poly(PolyLexer& lx) {
      LaurentPoly acc;
      bool        first = true;
      for (;;) {
        lx.skip();
        bool neg = false;
        if (lx.eat('-')) {
          neg = true;
        } else if (lx.eat('+')) {
        } else if (!first) {
          break;
        }
        LaurentPoly t = parse_term(lx);
        acc           = neg ? acc - t : acc + t;
        first         = false;
      }
      return acc;
    }
  }  // namespace

  LaurentPoly LaurentPoly::parse(std::string const& text) {
    PolyLexer   lx{text};
    LaurentPoly p = parse_poly(lx);
    lx.skip();
    if (lx.i != text.size()) {
      lx.fail("unexpected character");
    }
    return p;
  }

  LaurentPoly LaurentPoly::exact_quotient(LaurentPoly const& a, LaurentPoly const& b) {
    if (b.is_zero()) {
      throw PreconditionError("division by the zero polynomial");
    }
    if (a.is_zero()) {
      return {};
    }
    Dense       r(a._c);
    Dense const& d = b._c;
    if (r.size() < d.size()) {
      throw Error("exact_quotient: not divisible");
    }
    Dense quot(r.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
      Integer const& lead = r[k + d.size() - 1];
      if (lead % d.back() != 0) {
        throw Error("exact_quotient: not divisible");
      }
      Integer c = lead / d.back();
      for (std::size_t i = 0; i < d.size(); ++i) {
        r[k + i] -= c * d[i];
      }
      quot[k] = std::move(c);
    }
    for (auto const& x : r) {
      if (x != 0) {
        throw Error("exact_quotient: not divisible");
      }
    }
    return LaurentPoly(a._low - b._low, std::move(quot));
  }

  LaurentPoly LaurentPoly::gcd(LaurentPoly const& a, LaurentPoly const& b) {
    Dense x = primitive(a._c), y = primitive(b._c);
    if (x.empty()) {
      return LaurentPoly(0, y);
    }
    if (y.empty()) {
      return LaurentPoly(0, x);
    }
    if (x.size() < y.size()) {
      std::swap(x, y);
    }
    while (!y.empty()) {
      Dense r = primitive(prem(x, y));
      x       = std::move(y);
      y       = std::move(r);
    }
    return LaurentPoly(0, std::move(x));
  }

  ////////////////////////////////////////////////////////////////////////
  // LaurentScalar
  ////////////////////////////////////////////////////////////////////////

  LaurentScalar::LaurentScalar(LaurentPoly num, LaurentPoly den)
      : _num(std::move(num)), _den(std::move(den)) {
    if (_den.is_zero()) {
      throw PreconditionError("zero denominator");
    }
    canonicalize();
  }

  void LaurentScalar::canonicalize() {
    if (_num.is_zero()) {
      _den = LaurentPoly(1);
      return;
    }
    if (_den.low() != 0) {
      _num = _num.shifted(-_den.low());
      _den = _den.shifted(-_den.low());
    }
    if (!_den.is_constant()) {
      LaurentPoly g = LaurentPoly::gcd(_num, _den);
      if (!g.is_constant()) {
        _num = LaurentPoly::exact_quotient(_num.shifted(-_num.low()), g)
                   .shifted(_num.low());
        _den = LaurentPoly::exact_quotient(_den, g);
      }
    }
    Integer c = igcd(_num.content(), _den.content());
    if (c > 1) {
      _num = _num.divided(c);
      _den = _den.divided(c);
    }
    if (_den.lowest_coeff() < 0) {
      _num = -_num;
      _den = -_den;
    }
  }

  bool LaurentScalar::is_one() const noexcept {
    return _den.is_constant() && _num == _den;
  }

  LaurentScalar LaurentScalar::inverse() const {
    if (is_zero()) {
      throw PreconditionError("inverse of zero");
    }
    return LaurentScalar(_den, _num);
  }

  LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    r._num          = -r._num;
    return r;
  }

  namespace {
    bool unit_den(LaurentScalar const& a) {
      return a.denominator().is_constant() && a.denominator().lowest_coeff() == 1;
    }
  }  // namespace

  LaurentScalar operator+(LaurentScalar const& a, LaurentScalar const& b) {
    if (a.is_zero()) {
      return b;
    }
    if (b.is_zero()) {
      return a;
    }
    if (unit_den(a) && unit_den(b)) {
      LaurentScalar r;
      r._num = a._num + b._num;
      return r;
    }
    if (a._den == b._den) {
      return LaurentScalar(a._num + b._num, a._den);
    }
    return LaurentScalar(a._num * b._den + b._num * a._den, a._den * b._den);
  }

  LaurentScalar operator-(LaurentScalar const& a, LaurentScalar const& b) {
    return a + (-b);
  }

  LaurentScalar operator*(LaurentScalar const& a, LaurentScalar const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    if (unit_den(a) && unit_den(b)) {
      LaurentScalar r;
      r._num = a._num * b._num;
      return r;
    }
    return LaurentScalar(a._num * b._num, a._den * b._den);
  }

  LaurentScalar operator/(LaurentScalar const& a, LaurentScalar const& b) {
    return a * b.inverse();
  }

  std::string LaurentScalar::to_string() const {
    if (unit_den(*this)) {
      return _num.to_string();
    }
    return "(" + _num.to_string() + ")/(" + _den.to_string() + ")";
  }

  LaurentScalar LaurentScalar::parse(std::string const& text) {
    // poly | '(' poly ')' ['/' '(' poly ')']
    PolyLexer lx{text};
    auto      group = [&lx]() {
      if (lx.eat('(')) {
        LaurentPoly p = parse_poly(lx);
        if (!lx.eat(')')) {
          lx.fail("expected ')'");
        }
        return p;
      }
      return parse_poly(lx);
    };
    LaurentPoly num = group();
    LaurentPoly den(1);
    if (lx.eat('/')) {
      den = group();
      if (den.is_zero()) {
        lx.fail("zero denominator");
      }
    }
    lx.skip();
    if (lx.i != text.size()) {
      lx.fail("unexpected character");
    }
    return LaurentScalar(num, den);
  }

  Rational specialize(LaurentScalar const& x, Rational const& q0) {
    if (q0 == 0) {
      throw PreconditionError("cannot specialize at q = 0");
    }
    Rational d = x.denominator().evaluate(q0);
    if (d == 0) {
      throw PreconditionError("denominator " + x.denominator().to_string()
                              + " vanishes at q = " + q0.str());
    }
    return x.numerator().evaluate(q0) / d;
  }

}  // namespace orbibraid
