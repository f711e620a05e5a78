#include "artin/ogo/matrix.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::ogo {

Matrix::Matrix(std::size_t n, std::vector<Cyclo> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw PreconditionError("matrix entry count is not n^2");
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Cyclo(1)); }

Matrix Matrix::scalar(std::size_t n, const Cyclo& c) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Cyclo>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::parse(std::string_view text) {
  std::vector<std::vector<Cyclo>> rows(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == ';') {
      rows.emplace_back();
      ++i;
    } else if (ch == '(') {
      auto close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unterminated cyclotomic entry");
      auto at = text.find('@', close);
      if (at == std::string_view::npos) throw ParseError("cyclotomic entry lacks '@ zeta_n'");
      std::size_t end = at + 1;
      while (end < text.size() && std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) ++end;
      rows.back().push_back(Cyclo::parse(text.substr(i, end - i)));
      i = end;
    } else {
      std::size_t end = i;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ';' &&
             text[end] != ',')
        ++end;
      rows.back().push_back(Cyclo(cyc::parse_rational(text.substr(i, end - i))));
      i = end;
    }
  }
  if (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::size_t n = rows.size();
  std::vector<Cyclo> flat;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(n, std::move(flat));
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Cyclo Matrix::det() const {
  std::vector<Cyclo> a = a_;
  Cyclo d(1);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a[piv * n_ + c].is_zero()) ++piv;
    if (piv == n_) return Cyclo(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[c * n_ + j]);
      d = -d;
    }
    d *= a[c * n_ + c];
    Cyclo inv = a[c * n_ + c].inverse();
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (a[r * n_ + c].is_zero()) continue;
      Cyclo f = a[r * n_ + c] * inv;
      for (std::size_t j = c; j < n_; ++j) a[r * n_ + j] -= f * a[c * n_ + j];
    }
  }
  return d;
}

Cyclo Matrix::trace() const {
  Cyclo t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  Matrix a = *this, inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a(piv, c).is_zero()) ++piv;
    if (piv == n_) return std::nullopt;
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a(piv, j), a(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    Cyclo s = a(c, c).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Cyclo f = a(r, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_scalar() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
      if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
    }
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.n_ != y.n_) throw PreconditionError("matrix dimension mismatch");
  Matrix r(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      const Cyclo& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < x.n_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
    }
  return r;
}

Matrix operator*(const Cyclo& c, const Matrix& x) {
  Matrix r = x;
  for (auto& v : r.a_) v *= c;
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.n_ != y.n_) throw PreconditionError("matrix dimension mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ' ';
      const Cyclo& v = (*this)(i, j);
      if (auto q = v.rational())
        os << cyc::to_string(*q);
      else
        os << v.str();
    }
  }
  return os.str();
}

Matrix kronecker(const Matrix& x, const Matrix& y) {
  std::size_t n = x.dim(), m = y.dim();
  Matrix r(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r(i * m + k, j * m + l) = x(i, j) * y(k, l);
  return r;
}

Matrix swap_matrix(std::size_t n) {
  Matrix p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j * n + i, i * n + j) = Cyclo(1);
  return p;
}

std::optional<Cyclo> similitude_factor(const Matrix& m) {
  Matrix s = m.transpose() * m;
  if (!s.is_scalar() || s(0, 0).is_zero()) return std::nullopt;
  return s(0, 0);
}

int similitude_norm(const Matrix& m) {
  if (m.dim() % 2) throw PreconditionError("similitude norm needs even dimension");
  auto lambda = similitude_factor(m);
  if (!lambda) throw PreconditionError("matrix is not a similitude");
  Cyclo v = m.det();
  Cyclo linv = lambda->inverse();
  for (std::size_t i = 0; i < m.dim() / 2; ++i) v *= linv;
  if (v == Cyclo(1)) return 1;
  if (v == Cyclo(-1)) return -1;
  throw ConsistencyError("similitude norm is not a sign: " + v.str());
}

namespace {

// Coordinates x with a = x1 + i x2, d = x1 - i x2, b = x3 + i x4, c = -(x3 - i x4),
// so that det [[a, b], [c, d]] = x1^2 + x2^2 + x3^2 + x4^2.
Matrix coords_to_x(const std::vector<Cyclo>& x) {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  return Matrix(2, {x[0] + i * x[1], x[2] + i * x[3], -(x[2] - i * x[3]), x[0] - i * x[1]});
}

std::vector<Cyclo> x_to_coords(const Matrix& m) {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  Cyclo half(Rational(1, 2));
  Cyclo a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return {half * (a + d), half * (a - d) / i, half * (b - c), half * (b + c) / i};
}

}  // namespace

Matrix beta_map(const Matrix& g, const Matrix& gp) {
  if (g.dim() != 2 || gp.dim() != 2) throw PreconditionError("beta_map takes 2x2 matrices");
  if (g.det().is_zero() || gp.det().is_zero()) throw PreconditionError("beta_map: singular input");
  Matrix out(4);
  Matrix gt = g.transpose();
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<Cyclo> e(4, Cyclo(0));
    e[j] = Cyclo(1);
    auto col = x_to_coords(gt * coords_to_x(e) * gp);
    for (std::size_t r = 0; r < 4; ++r) out(r, j) = col[r];
  }
  return out;
}

std::pair<Matrix, Cyclo> odd_similitude_split(const Matrix& m) {
  std::size_t n = m.dim();
  if (n % 2 == 0) throw PreconditionError("odd_similitude_split needs odd dimension");
  auto lambda = similitude_factor(m);
  if (!lambda) throw PreconditionError("matrix is not a similitude");
  // c = det(M) lambda^-(n-1)/2 satisfies c^2 = lambda and c^n = det(M).
  Cyclo c = m.det();
  Cyclo linv = lambda->inverse();
  for (std::size_t i = 0; i < (n - 1) / 2; ++i) c *= linv;
  Matrix h = c.inverse() * m;
  return {h, c};
}

std::vector<Matrix> matrix_group(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  std::size_t n = gens[0].dim();
  // Every product lives in Q(zeta_N) for N the lcm of the generators' conductors.
  unsigned conductor = 1;
  for (const auto& g : gens)
    for (const auto& v : g.entries()) conductor = cyc::lcm(conductor, v.conductor());
  auto key_of = [conductor](const Matrix& m) {
    std::string key;
    for (const auto& v : m.entries()) key += v.promote(conductor).str();
    return key;
  };
  std::vector<Matrix> out{Matrix::identity(n)};
  std::map<std::string, std::size_t> seen{{key_of(out[0]), 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Matrix y = out[i] * g;
      auto key = key_of(y);
      if (seen.contains(key)) continue;
      if (out.size() >= cap) throw SizeLimitError("matrix group exceeds " + std::to_string(cap) + " elements");
      seen.emplace(key, out.size());
      out.push_back(std::move(y));
    }
  return out;
}

}  // namespace artin::ogo
