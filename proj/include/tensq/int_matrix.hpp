#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tensq {

// Dense integer matrix with arbitrary-precision entries, row-major.
// Everything here is exact; there is no floating point in this library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Exact determinant (Bareiss fraction-free elimination).
  mpz_class determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Smith normal form: u * m * v = s with u, v unimodular and s diagonal with
// a divisibility chain s(0,0) | s(1,1) | ... ; diagonal entries nonnegative.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Stacks the rows of a on top of the rows of b (must agree on cols).
IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b);

// Echelonized basis of the row lattice of x: rows with strictly increasing
// pivot columns spanning the same sublattice of Z^cols.
IntMatrix lattice_row_basis(const IntMatrix& x);

// Integer coordinates of v in terms of an echelonized basis, or nullopt if
// v is outside the row lattice.
std::optional<std::vector<mpz_class>> lattice_coordinates(
    const IntMatrix& basis, const std::vector<mpz_class>& v);

}  // namespace tensq
