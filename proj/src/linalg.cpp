#include "sphroots/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sphroots {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != dim) throw std::invalid_argument("from_columns: dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& x : data_) h = h * 1000003u ^ x.hash();
  return h;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rational& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

std::size_t rank_of(std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors));
}

bool linearly_independent(std::span<const Vec> vectors) { return rank_of(vectors) == vectors.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> coordinates(std::span<const Vec> basis, const Vec& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  const std::size_t dim = v.size();
  const std::size_t k = basis.size();
  // augmented [B | v]
  Matrix a(dim, k + 1);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < dim; ++r) a(r, c) = basis[c][r];
  for (std::size_t r = 0; r < dim; ++r) a(r, k) = v[r];
  const auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw std::invalid_argument("coordinates: basis is not independent");
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) x[pivots[i]] = a(i, k);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix a(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n + r) = 1;
  }
  const auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = a(r, n + c);
  return inv;
}

std::vector<Vec> independent_subset(std::span<const Vec> vectors) {
  std::vector<Vec> out;
  for (const auto& v : vectors) {
    out.push_back(v);
    if (!linearly_independent(out)) out.pop_back();
  }
  return out;
}

std::vector<std::vector<std::int64_t>> integer_row_basis(std::vector<std::vector<std::int64_t>> rows) {
  // Integer row reduction (Euclid on columns) down to echelon form.
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    while (true) {
      // smallest nonzero |entry| in column c at or below `top`
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t q = rows[r][c] / rows[top][c];
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = detail::checked_sub(rows[r][k], detail::checked_mul(q, rows[top][k]));
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][c] != 0) {
      if (rows[top][c] < 0)
        for (auto& x : rows[top]) x = -x;
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

Vec primitive_ray(const Vec& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den());
  std::int64_t g = 0;
  Vec scaled = scale(Rational(l), v);
  for (const auto& x : scaled) g = std::gcd(g, x.num());
  if (g == 0) return v;
  return scale(Rational(1, g), scaled);
}

}  // namespace sphroots
