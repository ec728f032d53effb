#include "orbibraid/qmatrix.hpp"

#include <utility>

#include "orbibraid/error.hpp"

namespace orbibraid {

  QMatrix::QMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _e(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw PreconditionError("matrix dimensions must be positive");
    }
  }

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  QMatrix QMatrix::from_rows(std::vector<std::vector<LaurentScalar>> const& rows) {
    if (rows.empty() || rows[0].empty()) {
      throw PreconditionError("empty matrix");
    }
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m._cols) {
        throw PreconditionError("ragged matrix rows");
      }
      for (std::size_t j = 0; j < m._cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  QMatrix QMatrix::flip(std::size_t d) {
    QMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        p(j * d + i, i * d + j) = 1;
      }
    }
    return p;
  }

  bool QMatrix::is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        auto const& x = (*this)(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  bool QMatrix::is_zero() const {
    for (auto const& x : _e) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  QMatrix operator*(QMatrix const& a, QMatrix const& b) {
    if (a._cols != b._rows) {
      throw PreconditionError("matrix product of " + std::to_string(a._rows) + "x"
                              + std::to_string(a._cols) + " and "
                              + std::to_string(b._rows) + "x"
                              + std::to_string(b._cols));
    }
    QMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          auto const& y = b(k, j);
          if (!y.is_zero()) {
            c(i, j) += x * y;
          }
        }
      }
    }
    return c;
  }

  QMatrix operator+(QMatrix const& a, QMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw PreconditionError("matrix sum with mismatched shapes");
    }
    QMatrix c = a;
    for (std::size_t i = 0; i < c._e.size(); ++i) {
      c._e[i] += b._e[i];
    }
    return c;
  }

  QMatrix operator-(QMatrix const& a, QMatrix const& b) {
    QMatrix nb = b;
    for (auto& x : nb._e) {
      x = -x;
    }
    return a + nb;
  }

  QMatrix QMatrix::inverse() const {
    if (!is_square()) {
      throw PreconditionError("inverse of a non-square matrix");
    }
    std::size_t n = _rows;
    QMatrix     a = *this;
    QMatrix     r = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == n) {
        throw PreconditionError("matrix is singular");
      }
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(r(piv, j), r(col, j));
        }
      }
      LaurentScalar inv = a(col, col).inverse();
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) *= inv;
        r(col, j) *= inv;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col).is_zero()) {
          continue;
        }
        LaurentScalar f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          if (!a(col, j).is_zero()) {
            a(i, j) = a(i, j) - f * a(col, j);
          }
          if (!r(col, j).is_zero()) {
            r(i, j) = r(i, j) - f * r(col, j);
          }
        }
      }
    }
    return r;
  }

  LaurentScalar QMatrix::determinant() const {
    if (!is_square()) {
      throw PreconditionError("determinant of a non-square matrix");
    }
    std::size_t   n   = _rows;
    QMatrix       a   = *this;
    LaurentScalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == n) {
        return 0;
      }
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
        }
        det = -det;
      }
      det *= a(col, col);
      LaurentScalar inv = a(col, col).inverse();
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a(i, col).is_zero()) {
          continue;
        }
        LaurentScalar f = a(i, col) * inv;
        for (std::size_t j = col; j < n; ++j) {
          if (!a(col, j).is_zero()) {
            a(i, j) = a(i, j) - f * a(col, j);
          }
        }
      }
    }
    return det;
  }

  std::string QMatrix::to_string() const {
    std::vector<std::string> cells(_e.size());
    std::vector<std::size_t> width(_cols, 0);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        cells[i * _cols + j] = (*this)(i, j).to_string();
        width[j]             = std::max(width[j], cells[i * _cols + j].size());
      }
    }
    std::string out;
    for (std::size_t i = 0; i < _rows; ++i) {
      out += "[";
      for (std::size_t j = 0; j < _cols; ++j) {
        auto const& s = cells[i * _cols + j];
        out += (j ? "  " : " ") + std::string(width[j] - s.size(), ' ') + s;
      }
      out += " ]\n";
    }
    return out;
  }

  nlohmann::json QMatrix::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < _rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < _cols; ++k) {
        row.push_back((*this)(i, k).to_string());
      }
      j.push_back(row);
    }
    return j;
  }

  QMatrix QMatrix::from_json(nlohmann::json const& j) {
    if (!j.is_array() || j.empty()) {
      throw PreconditionError("matrix must be a non-empty array of rows");
    }
    std::vector<std::vector<LaurentScalar>> rows;
    for (auto const& row : j) {
      if (!row.is_array()) {
        throw PreconditionError("matrix row must be an array");
      }
      std::vector<LaurentScalar> r;
      for (auto const& x : row) {
        if (x.is_string()) {
          r.push_back(LaurentScalar::parse(x.get<std::string>()));
        } else if (x.is_number_integer()) {
          r.push_back(LaurentScalar(x.get<long long>()));
        } else {
          throw PreconditionError("matrix entries must be strings or integers");
        }
      }
      rows.push_back(std::move(r));
    }
    return from_rows(rows);
  }

  QMatrix kron(QMatrix const& a, QMatrix const& b) {
    QMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto const& x = a(i, j);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            if (!b(k, l).is_zero()) {
              c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
            }
          }
        }
      }
    }
    return c;
  }

  QMatrix pad(QMatrix const& a, std::size_t left, std::size_t right) {
    QMatrix r = a;
    if (left > 1) {
      r = kron(QMatrix::identity(left), r);
    }
    if (right > 1) {
      r = kron(r, QMatrix::identity(right));
    }
    return r;
  }

  std::vector<std::vector<Rational>> specialize(QMatrix const& a, Rational const& q0) {
    std::vector<std::vector<Rational>> out(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out[i][j] = specialize(a(i, j), q0);
      }
    }
    return out;
  }

}  // namespace orbibraid
