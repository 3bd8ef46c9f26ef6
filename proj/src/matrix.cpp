#include "tropjac/matrix.hpp"

#include <cstdlib>
#include <utility>

namespace tropjac {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(a, other(k, j)));
    }
  return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(k, (*this)(src, j)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(k, (*this)(i, src)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_sub(0, (*this)(i, j));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = checked_sub(0, (*this)(i, j));
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, Int x, Int y, Int u, Int v) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Int ra = (*this)(a, j), rb = (*this)(b, j);
    (*this)(a, j) = checked_add(checked_mul(x, ra), checked_mul(y, rb));
    (*this)(b, j) = checked_add(checked_mul(u, ra), checked_mul(v, rb));
  }
}

void IntMatrix::combine_cols(std::size_t a, std::size_t b, Int x, Int y, Int u, Int v) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int ca = (*this)(i, a), cb = (*this)(i, b);
    (*this)(i, a) = checked_add(checked_mul(x, ca), checked_mul(y, cb));
    (*this)(i, b) = checked_add(checked_mul(u, ca), checked_mul(v, cb));
  }
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm h;
  h.form = m;
  h.transform = IntMatrix::identity(m.rows());
  h.transform_inverse = IntMatrix::identity(m.rows());
  IntMatrix& a = h.form;
  IntMatrix& u = h.transform;
  IntMatrix& ui = h.transform_inverse;

  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int p = a(r, c), q = a(i, c);
      ExtGcd e = ext_gcd(p, q);
      Int x = e.x, y = e.y, s = -(q / e.g), t = p / e.g;
      a.combine_rows(r, i, x, y, s, t);
      u.combine_rows(r, i, x, y, s, t);
      ui.combine_cols(r, i, t, -s, -y, x);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
      ui.negate_col(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a(i, c), a(r, c));
      if (q == 0) continue;
      a.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
      ui.add_col_multiple(r, i, q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

namespace {

struct SmithState {
  IntMatrix a, u, v, vi;

  void row_add(std::size_t dst, std::size_t src, Int k) {
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
  }
  void col_add(std::size_t dst, std::size_t src, Int k) {
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    vi.add_row_multiple(src, dst, -k);
  }
  void row_swap(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void col_swap(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    vi.swap_rows(x, y);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols())};
  IntMatrix& a = st.a;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t rank = 0;

  for (std::size_t t = 0; t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = 0, pj = 0;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        Int v = std::llabs(a(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        st.row_add(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        st.col_add(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t bi = t, bj = t;
        Int b = std::llabs(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && std::llabs(a(i, t)) < b) {
            b = std::llabs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && std::llabs(a(t, j)) < b) {
            b = std::llabs(a(t, j));
            bi = t;
            bj = j;
          }
        st.row_swap(t, bi);
        st.col_swap(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            st.row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      st.u.negate_row(t);
    }
    rank = t + 1;
  }

  SmithForm s;
  s.left = std::move(st.u);
  s.diagonal = std::move(st.a);
  s.right = std::move(st.v);
  s.right_inverse = std::move(st.vi);
  s.rank = rank;
  return s;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

}  // namespace tropjac
