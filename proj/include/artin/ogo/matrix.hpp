#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/cyc/cyclo.hpp"

namespace artin::ogo {

using cyc::Cyclo;
using cyc::Rational;

/// Square matrix over a cyclotomic field.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::size_t n, std::vector<Cyclo> entries);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Cyclo& c);
  static Matrix diagonal(const std::vector<Cyclo>& d);
  // "1 0; 0 (0, 1) @ zeta_4": rows separated by ';', entries by spaces.
  static Matrix parse(std::string_view text);

  std::size_t dim() const { return n_; }
  const Cyclo& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Cyclo& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<Cyclo>& entries() const { return a_; }

  Matrix transpose() const;
  Cyclo det() const;
  Cyclo trace() const;
  std::optional<Matrix> inverse() const;
  bool is_scalar() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Cyclo& c, const Matrix& x);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Cyclo> a_;
};

Matrix kronecker(const Matrix& x, const Matrix& y);
/// The swap x (x) y -> y (x) x on C^n (x) C^n.
Matrix swap_matrix(std::size_t n);

/// lambda with transpose(M) M = lambda I, if M is a similitude.
std::optional<Cyclo> similitude_factor(const Matrix& m);
/// lambda^-m det(M) in dimension 2m; always +1 or -1.
int similitude_norm(const Matrix& m);

/// The 4x4 matrix of X -> transpose(g) X g' on 2x2 matrices, in coordinates
/// in which det X is the standard sum of four squares.
Matrix beta_map(const Matrix& g, const Matrix& gp);

/// Odd dimension: M = c * h with c scalar and h in SO(n). Returns (h, c).
std::pair<Matrix, Cyclo> odd_similitude_split(const Matrix& m);

/// All products of the generators (a finite matrix group), up to `cap` elements.
std::vector<Matrix> matrix_group(const std::vector<Matrix>& gens, std::size_t cap = 20000);

}  // namespace artin::ogo
