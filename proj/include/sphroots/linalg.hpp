#pragma once

// Dense exact linear algebra over Q.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sphroots/rational.hpp"

namespace sphroots {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vec> cols, std::size_t dim);
  static Matrix from_rows(std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

// vector helpers
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t rank_of(std::span<const Vec> vectors);
bool linearly_independent(std::span<const Vec> vectors);

// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);

// Coordinates of v in the basis `basis` (which must be independent), or
// nullopt when v is outside their span.
std::optional<Vec> coordinates(std::span<const Vec> basis, const Vec& v);

std::optional<Matrix> inverse(const Matrix& m);

// A maximal independent subset, in input order.
std::vector<Vec> independent_subset(std::span<const Vec> vectors);

// Z-basis (row Hermite form) of the lattice spanned by integer vectors.
std::vector<std::vector<std::int64_t>> integer_row_basis(std::vector<std::vector<std::int64_t>> rows);

// Scale a rational vector to the primitive integer vector on the same ray.
Vec primitive_ray(const Vec& v);

}  // namespace sphroots
