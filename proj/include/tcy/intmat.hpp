#pragma once

#include <algorithm>
#include <optional>

#include "tcy/rational.hpp"

namespace tcy {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_columns(const std::vector<IntVec>& cols_in) {
    if (cols_in.empty()) return IntMat(0, 0);
    IntMat m(static_cast<long>(cols_in[0].size()), static_cast<long>(cols_in.size()));
    for (long j = 0; j < m.cols; ++j)
      for (long i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
    return m;
  }

  static IntMat from_rows(const std::vector<IntVec>& rows_in) {
    if (rows_in.empty()) return IntMat(0, 0);
    IntMat m(static_cast<long>(rows_in.size()), static_cast<long>(rows_in[0].size()));
    for (long i = 0; i < m.rows; ++i)
      for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    return m;
  }

  IntVec column(long j) const {
    IntVec v(rows);
    for (long i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  IntVec row(long i) const {
    IntVec v(cols);
    for (long j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
      for (long k = 0; k < x.cols; ++k) {
        if (x.at(i, k) == 0) continue;
        for (long j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  IntVec apply(const IntVec& v) const {
    IntVec w(rows, Int(0));
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) w[i] += at(i, j) * v[j];
    return w;
  }
};

// A = U * S * V with U, V unimodular and S diagonal with d1 | d2 | ...
struct SNFDecomposition {
  IntMat U, S, V;
  IntMat Uinv, Vinv;  // maintained alongside; handy for kernels and solves
  long rank = 0;
};

namespace detail {

inline void swap_rows(IntMat& m, long i, long j) {
  for (long c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
inline void swap_cols(IntMat& m, long i, long j) {
  for (long r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= k * row j
inline void row_sub(IntMat& m, long i, long j, const Int& k) {
  for (long c = 0; c < m.cols; ++c) m.at(i, c) -= k * m.at(j, c);
}
// col i -= k * col j
inline void col_sub(IntMat& m, long i, long j, const Int& k) {
  for (long r = 0; r < m.rows; ++r) m.at(r, i) -= k * m.at(r, j);
}
inline void negate_row(IntMat& m, long i) {
  for (long c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}
inline void negate_col(IntMat& m, long j) {
  for (long r = 0; r < m.rows; ++r) m.at(r, j) = -m.at(r, j);
}

}  // namespace detail

// Smith normal form with minimal-absolute-value pivoting.
inline SNFDecomposition smith_normal_form(const IntMat& A) {
  using namespace detail;
  SNFDecomposition res;
  res.S = A;
  res.U = IntMat::identity(A.rows);
  res.Uinv = IntMat::identity(A.rows);
  res.V = IntMat::identity(A.cols);
  res.Vinv = IntMat::identity(A.cols);
  IntMat& S = res.S;

  // invariant: A = U * S * V throughout
  auto row_op = [&](long i, long j, const Int& k) {
    // S <- E S with E = I - k e_ij  =>  U <- U E^{-1}, E^{-1} = I + k e_ij
    row_sub(S, i, j, k);
    // (U E^{-1})_{.,j} = U_{.,j} + k U_{.,i}
    col_sub(res.U, j, i, -k);
    row_sub(res.Uinv, i, j, k);
  };
  auto col_op = [&](long i, long j, const Int& k) {
    // S <- S F with F = I - k e_ji (col i -= k col j) => V <- F^{-1} V
    col_sub(S, i, j, k);
    row_sub(res.V, j, i, -k);
    col_sub(res.Vinv, i, j, k);
  };

  auto do_swap_rows = [&](long i, long j) {
    swap_rows(S, i, j);
    swap_cols(res.U, i, j);
    swap_rows(res.Uinv, i, j);
  };
  auto do_swap_cols = [&](long i, long j) {
    swap_cols(S, i, j);
    swap_rows(res.V, i, j);
    swap_cols(res.Vinv, i, j);
  };

  long t = 0;
  long n = std::min(A.rows, A.cols);
  while (t < n) {
    // minimal-absolute-value nonzero pivot in S[t.., t..]
    long pi = -1, pj = -1;
    Int best;
    for (long i = t; i < S.rows; ++i)
      for (long j = t; j < S.cols; ++j) {
        if (S.at(i, j) == 0) continue;
        Int v = abs(S.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // all zero
    if (pi != t) do_swap_rows(t, pi);
    if (pj != t) do_swap_cols(t, pj);

    // improve the pivot until it divides its whole row and column;
    // each round strictly decreases |pivot|, so this terminates
    bool improved = false;
    for (long i = t + 1; i < S.rows; ++i) {
      if (S.at(i, t) % S.at(t, t) != 0) {
        Int q = floor_div(S.at(i, t), S.at(t, t));
        row_op(i, t, q);
        do_swap_rows(t, i);
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (long j = t + 1; j < S.cols; ++j) {
      if (S.at(t, j) % S.at(t, t) != 0) {
        Int q = floor_div(S.at(t, j), S.at(t, t));
        col_op(j, t, q);
        do_swap_cols(t, j);
        improved = true;
        break;
      }
    }
    if (improved) continue;

    // pivot divides row t and column t: clear the row first, then the
    // column; after the row is zero the column ops cause no fill-in
    for (long j = t + 1; j < S.cols; ++j) {
      if (S.at(t, j) == 0) continue;
      col_op(j, t, Int(S.at(t, j) / S.at(t, t)));
    }
    for (long i = t + 1; i < S.rows; ++i) {
      if (S.at(i, t) == 0) continue;
      row_op(i, t, Int(S.at(i, t) / S.at(t, t)));
    }

    // divisibility: S[t][t] must divide everything below-right
    bool redo = false;
    for (long i = t + 1; i < S.rows && !redo; ++i)
      for (long j = t + 1; j < S.cols && !redo; ++j) {
        if (S.at(i, j) % S.at(t, t) != 0) {
          // fold row i into row t and redo this step
          row_op(t, i, Int(-1));
          redo = true;
        }
      }
    if (redo) continue;

    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_col(res.U, t);
      negate_row(res.Uinv, t);
    }
    ++t;
  }
  res.rank = t;
  return res;
}

// Z-basis of {v : Av = 0}; columns are primitive and saturated.
inline std::vector<IntVec> kernel_basis(const IntMat& A) {
  if (A.cols == 0) return {};
  if (A.rows == 0) {
    std::vector<IntVec> basis;
    IntMat id = IntMat::identity(A.cols);
    for (long j = 0; j < A.cols; ++j) basis.push_back(id.column(j));
    return basis;
  }
  SNFDecomposition snf = smith_normal_form(A);
  std::vector<IntVec> basis;
  for (long j = snf.rank; j < A.cols; ++j) basis.push_back(snf.Vinv.column(j));
  return basis;
}

// Unimodular matrix whose first column is the given primitive vector.
inline IntMat unimodular_complete(const IntVec& v) {
  long n = static_cast<long>(v.size());
  require(n > 0, ErrorKind::InvalidInput, "empty vector");
  IntMat col(n, 1);
  for (long i = 0; i < n; ++i) col.at(i, 0) = v[i];
  SNFDecomposition snf = smith_normal_form(col);
  require(snf.rank == 1 && snf.S.at(0, 0) == 1, ErrorKind::NonPrimitive,
          "vector is not primitive");
  // A = U S V, S = e1 * V(1x1), V = +-1  =>  v = (+-1) * U e1
  IntMat W = snf.U;
  if (snf.V.at(0, 0) < 0) detail::negate_col(W, 0);
  return W;
}

inline Int det(const IntMat& A) {
  require(A.rows == A.cols, ErrorKind::InvalidInput, "det of non-square matrix");
  SNFDecomposition snf = smith_normal_form(A);
  if (snf.rank < A.rows) return 0;
  Int d = 1;
  for (long i = 0; i < A.rows; ++i) d *= snf.S.at(i, i);
  // |det U| = |det V| = 1; S has nonnegative diagonal, so this is |det A|.
  // Recover the sign by Bareiss on small matrices.
  IntMat m = A;
  int sign = 1;
  Int prev = 1;
  for (long k = 0; k < m.rows - 1; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < m.rows; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      detail::swap_rows(m, k, p);
      sign = -sign;
    }
    for (long i = k + 1; i < m.rows; ++i)
      for (long j = k + 1; j < m.cols; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(m.rows - 1, m.cols - 1);
}

// Exact rank over Q.
inline long rank_rational(const IntMat& A) { return smith_normal_form(A).rank; }

// Solve A x = b over Q for square invertible A.
inline RatVec solve_rational(const IntMat& A, const RatVec& b) {
  long n = A.rows;
  require(A.cols == n && static_cast<long>(b.size()) == n, ErrorKind::InvalidInput,
          "solve: shape mismatch");
  std::vector<RatVec> m(n, RatVec(n + 1));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) m[i][j] = Rat(A.at(i, j));
    m[i][n] = b[i];
  }
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (m[i][k] != 0) {
        p = i;
        break;
      }
    require(p >= 0, ErrorKind::InvalidInput, "solve: singular matrix");
    std::swap(m[k], m[p]);
    Rat inv = Rat(1) / m[k][k];
    for (long j = k; j <= n; ++j) m[k][j] *= inv;
    for (long i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (long j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  RatVec x(n);
  for (long i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

// Is b in the Z-span of the columns of A?  If so, optionally return one witness x.
inline bool in_integer_span(const IntMat& A, const IntVec& b, IntVec* witness = nullptr) {
  SNFDecomposition snf = smith_normal_form(A);
  IntVec c = snf.Uinv.apply(b);
  IntVec y(A.cols, Int(0));
  for (long i = 0; i < A.rows; ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.S.at(i, i) != 0) return false;
      if (i < A.cols) y[i] = c[i] / snf.S.at(i, i);
    } else if (c[i] != 0) {
      return false;
    }
  }
  if (witness) *witness = snf.Vinv.apply(y);
  return true;
}

// Exact rank of a list of rational row vectors.
inline long rank_rows(std::vector<RatVec> rows) {
  long rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols; ++col) {
    long piv = -1;
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = static_cast<long>(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = Rat(1) / rows[rank][col];
    for (size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<long>(i) == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
    if (rank == static_cast<long>(rows.size())) break;
  }
  return rank;
}

}  // namespace tcy
