#ifndef ORBIBRAID_QMATRIX_HPP_
#define ORBIBRAID_QMATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbibraid/laurent.hpp"

namespace orbibraid {

  // Dense matrix of LaurentScalar entries.
  class QMatrix {
   public:
    QMatrix() : QMatrix(1, 1) {}
    QMatrix(std::size_t rows, std::size_t cols);  // zero
    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::vector<std::vector<LaurentScalar>> const& rows);
    // swaps the two tensor factors of V (x) V, dim V = d
    static QMatrix flip(std::size_t d);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }
    LaurentScalar const& operator()(std::size_t i, std::size_t j) const {
      return _e[i * _cols + j];
    }
    LaurentScalar& operator()(std::size_t i, std::size_t j) {
      return _e[i * _cols + j];
    }

    bool is_identity() const;
    bool is_zero() const;

    friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator+(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator-(QMatrix const& a, QMatrix const& b);
    friend bool    operator==(QMatrix const&, QMatrix const&) = default;

    // exact; PreconditionError when singular or not square
    QMatrix       inverse() const;
    LaurentScalar determinant() const;

    std::string     to_string() const;
    nlohmann::json  to_json() const;
    static QMatrix  from_json(nlohmann::json const& j);

   private:
    std::size_t                _rows;
    std::size_t                _cols;
    std::vector<LaurentScalar> _e;
  };

  QMatrix kron(QMatrix const& a, QMatrix const& b);
  // I_left (x) a (x) I_right
  QMatrix pad(QMatrix const& a, std::size_t left, std::size_t right);

  std::vector<std::vector<Rational>> specialize(QMatrix const& a, Rational const& q0);

}  // namespace orbibraid

#endif  // ORBIBRAID_QMATRIX_HPP_
