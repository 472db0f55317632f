#include "qhalg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qhalg {

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

Vec unit_vec(std::size_t n, std::size_t i, const Field& f) {
  Vec v = zero_vec(n, f);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scaled(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows, const Field& f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec r = zero_vec(rows_, field_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-field_.one()); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  Matrix b(r1 - r0, c1 - c0, field_);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < C; ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j : nz) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(0, C, m.field());
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(C, m.field());
    v[free] = m.field().one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.append_row(v);
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols(), m.field());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.block(0, n, n, 2 * n);
}

Subspace::Subspace(std::size_t ambient, const Field& f)
    : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

Subspace Subspace::full(std::size_t ambient, const Field& f) {
  return span(Matrix::identity(ambient, f));
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols(), rows.field());
  s.basis_ = rows;
  s.normalize();
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient, const Field& f) {
  return span(Matrix::from_rows(vectors, ambient, f));
}

void Subspace::normalize() {
  pivots_ = rref(basis_);
  basis_ = basis_.block(0, pivots_.size(), 0, ambient_);
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (r[pivots_[k]].is_zero()) continue;
    Scalar c = r[pivots_[k]];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) r[j] -= c * basis_(k, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

Vec Subspace::coordinates(const Vec& v) const {
  Vec c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v.at(p));
  return c;
}

bool Subspace::insert(const Vec& v) {
  if (contains(v)) return false;
  basis_.append_row(v);
  normalize();
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  Matrix m = basis_;
  for (std::size_t k = 0; k < o.dim(); ++k) m.append_row(o.basis_.row(k));
  return span(m);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("subspace intersection: ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_, field_);
  // x B = y C  <=>  (x, y) in the left kernel of [B; -C]
  Matrix stacked = basis_;
  for (std::size_t k = 0; k < o.dim(); ++k) stacked.append_row(scaled(o.basis_.row(k), -field_.one()));
  Matrix kernel = nullspace(stacked.transpose());
  Matrix rows(0, ambient_, field_);
  for (std::size_t t = 0; t < kernel.rows(); ++t) {
    Vec v = zero_vec(ambient_, field_);
    for (std::size_t k = 0; k < dim(); ++k) axpy(v, kernel(t, k), basis_.row(k));
    rows.append_row(v);
  }
  return span(rows);
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  for (std::size_t k = 0; k < dim(); ++k)
    if (!o.contains(basis_.row(k))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace qhalg
