#include "tensq/int_matrix.hpp"

#include <sstream>

#include "tensq/errors.hpp"

namespace tensq {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const mpz_class& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

mpz_class IntMatrix::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; all divisions are exact.
  IntMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw DimensionMismatch("stack_rows: column mismatch");
  const std::size_t cols = a.rows() ? a.cols() : b.cols();
  IntMatrix c(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

IntMatrix lattice_row_basis(const IntMatrix& x) {
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    std::vector<mpz_class> r(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) r[j] = x.at(i, j);
    rows.push_back(std::move(r));
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < x.cols() && top < rows.size(); ++col) {
    // Euclid on the column until one nonzero entry survives at `top`.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best == rows.size() ||
             abs(rows[i][col]) < abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;  // column clear below top
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_class q = rows[i][col] / rows[top][col];
        if (q != 0)
          for (std::size_t j = col; j < x.cols(); ++j)
            rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[top][col] < 0)
          for (std::size_t j = col; j < x.cols(); ++j)
            rows[top][j] = -rows[top][j];
        ++top;
        break;
      }
    }
  }
  IntMatrix b(top, x.cols());
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) b.at(i, j) = rows[i][j];
  return b;
}

std::optional<std::vector<mpz_class>> lattice_coordinates(
    const IntMatrix& basis, const std::vector<mpz_class>& v) {
  if (v.size() != basis.cols() && basis.rows() > 0)
    throw DimensionMismatch("lattice_coordinates: length mismatch");
  std::vector<mpz_class> rem = v;
  std::vector<mpz_class> coords(basis.rows(), 0);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < basis.cols() && basis.at(i, piv) == 0) ++piv;
    if (piv == basis.cols()) continue;
    if (rem[piv] % basis.at(i, piv) != 0) return std::nullopt;
    mpz_class q = rem[piv] / basis.at(i, piv);
    coords[i] = q;
    if (q != 0)
      for (std::size_t j = piv; j < basis.cols(); ++j)
        rem[j] -= q * basis.at(i, j);
  }
  for (const mpz_class& r : rem)
    if (r != 0) return std::nullopt;
  return coords;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace tensq
