#include "schober/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace schober {

namespace {

std::string shape(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// In-place Gauss-Jordan on m; returns pivot columns.
std::vector<std::size_t> reduce_in_place(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rat lead = m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::string to_string(const Rat& x) { return x.get_str(10); }

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rat out(std::string(text), 10);
  out.canonicalize();
  return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "entry count " + std::to_string(data_.size()) + " for " +
                    std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

RatMatrix RatMatrix::column(std::initializer_list<Rat> entries) {
  return {entries.size(), 1, std::vector<Rat>(entries)};
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block outside " + shape(*this));
  }
  RatMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block " + shape(b) + " does not fit in " + shape(*this));
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorKind::DimensionMismatch, shape(*this) + " + " + shape(o));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorKind::DimensionMismatch, shape(*this) + " - " + shape(o));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator-(RatMatrix a) { return a *= Rat(-1); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return matmul(a, b); }
RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, shape(a) + " * " + shape(b));
  }
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

EchelonForm rref(const RatMatrix& a) {
  EchelonForm out{a, {}};
  out.pivots = reduce_in_place(out.reduced);
  return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

bool is_invertible(const RatMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of " + shape(a));
  const std::size_t n = a.rows();
  RatMatrix aug = hstack(a, RatMatrix::identity(n));
  const auto pivots = reduce_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error(ErrorKind::Singular, "matrix of shape " + shape(a) + " is not invertible");
  }
  return aug.block(0, n, n, n);
}

Rat determinant(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of " + shape(a));
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss: every division below is exact in the entry ring.
  RatMatrix m = a;
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix kernel_basis(const RatMatrix& a) {
  const auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // One basis vector per free column, stored as rows of the transpose.
  RatMatrix basis_t(n - pivots.size(), n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis_t(k, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis_t(k, pivots[r]) = -reduced(r, free);
    ++k;
  }
  reduce_in_place(basis_t);
  return basis_t.transpose();
}

RatMatrix solve_in_basis(const RatMatrix& basis, const RatMatrix& target) {
  if (basis.rows() != target.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "basis " + shape(basis) + " vs target " + shape(target));
  }
  const std::size_t k = basis.cols();
  RatMatrix aug = hstack(basis, target);
  const auto pivots = reduce_in_place(aug);
  std::size_t basis_pivots = 0;
  while (basis_pivots < pivots.size() && pivots[basis_pivots] < k) ++basis_pivots;
  if (basis_pivots < k) throw Error(ErrorKind::InvalidInput, "basis columns are linearly dependent");
  if (basis_pivots < pivots.size()) {
    throw Error(ErrorKind::NotInSpan,
                "target column " + std::to_string(pivots[basis_pivots] - k) + " is outside the span");
  }
  return aug.block(0, k, k, target.cols());
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack " + shape(a) + " | " + shape(b));
  RatMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack " + shape(a) + " ; " + shape(b));
  RatMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << shape(m) << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
  }
  return os << "]";
}

}  // namespace schober
