#include "tensq/errors.hpp"
#include "tensq/int_matrix.hpp"

// Smith normal form by elimination: move the smallest nonzero entry of the
// working submatrix to the pivot, reduce its row and column by quotients,
// and once the pivot stands alone make it divide the rest of the submatrix
// before moving on.  Row operations are mirrored on u, column operations on
// v, so u*m*v = s holds exactly at every step.

namespace tensq {

namespace {

struct Work {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }

  // row a += f * row b
  void add_row(std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) += f * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += f * u.at(b, j);
  }

  // col a += f * col b
  void add_col(std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += f * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += f * v.at(i, b);
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

bool find_min_entry(const IntMatrix& d, std::size_t s, std::size_t& ri,
                    std::size_t& rj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = s; i < d.rows(); ++i)
    for (std::size_t j = s; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      mpz_class a = abs(d.at(i, j));
      if (!found || a < best) {
        best = a;
        ri = i;
        rj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Work w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t nmin = std::min(m.rows(), m.cols());

  for (std::size_t s = 0; s < nmin; ++s) {
    for (;;) {
      std::size_t ri = s, rj = s;
      if (!find_min_entry(w.d, s, ri, rj)) break;  // submatrix is zero
      w.swap_rows(s, ri);
      w.swap_cols(s, rj);

      bool disturbed = false;
      for (std::size_t i = s + 1; i < w.d.rows(); ++i) {
        if (w.d.at(i, s) == 0) continue;
        mpz_class q = w.d.at(i, s) / w.d.at(s, s);  // truncated division
        if (q != 0) w.add_row(i, s, -q);
        if (w.d.at(i, s) != 0) disturbed = true;  // remainder survives
      }
      for (std::size_t j = s + 1; j < w.d.cols(); ++j) {
        if (w.d.at(s, j) == 0) continue;
        mpz_class q = w.d.at(s, j) / w.d.at(s, s);
        if (q != 0) w.add_col(j, s, -q);
        if (w.d.at(s, j) != 0) disturbed = true;
      }
      if (disturbed) continue;

      // Pivot is lone; pull in any submatrix entry it does not divide yet.
      bool divides_all = true;
      for (std::size_t i = s + 1; i < w.d.rows() && divides_all; ++i)
        for (std::size_t j = s + 1; j < w.d.cols() && divides_all; ++j)
          if (w.d.at(i, j) % w.d.at(s, s) != 0) {
            w.add_row(s, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (w.d.at(s, s) < 0) w.negate_row(s);
  }

  internal_check(w.u * m * w.v == w.d, "smith: u*m*v != s");
  return SmithDecomposition{std::move(w.u), std::move(w.d), std::move(w.v)};
}

}  // namespace tensq
