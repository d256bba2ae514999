#pragma once

// Exact dense linear algebra over the rationals.
//
// Every map in the library is a RatMatrix acting on column vectors, so a map
// V -> W with dim V = m, dim W = k is a k x m matrix. Zero-sized matrices are
// legitimate values and stand for maps to or from the zero space.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "schober/error.hpp"

namespace schober {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator.
using Rat = mpq_class;

/// Canonical text form "p/q", or "p" when q = 1.
std::string to_string(const Rat& x);

/// Parses "p", "-p", "p/q" with decimal digits and q != 0. Throws
/// Error(Parse) on anything else.
Rat parse_rat(std::string_view text);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RatMatrix identity(std::size_t n);
  /// Column vector.
  static RatMatrix column(std::initializer_list<Rat> entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] const std::vector<Rat>& entries() const noexcept { return data_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] RatMatrix transpose() const;
  /// Rectangular sub-block starting at (r0, c0).
  [[nodiscard]] RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                                std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rat& s);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, RatMatrix a);

/// Exact product; throws DimensionMismatch when a.cols() != b.rows().
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

/// Exact inverse. Throws DimensionMismatch for non-square input and Singular
/// when rank < size.
RatMatrix inverse(const RatMatrix& a);

/// True iff a is square of full rank; the 0x0 matrix counts as invertible.
bool is_invertible(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Bareiss fraction-free elimination; throws DimensionMismatch if not square.
Rat determinant(const RatMatrix& a);

/// Reduced row echelon form together with the pivot columns.
struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm rref(const RatMatrix& a);

/// Columns form a basis of {x : a x = 0}. The basis matrix is in reduced
/// column echelon form, so the result depends only on the kernel itself.
RatMatrix kernel_basis(const RatMatrix& a);

/// The unique x with basis * x = target. Throws NotInSpan when some column of
/// target lies outside the column span, InvalidInput when the basis columns
/// are dependent and DimensionMismatch on a row-count mismatch.
RatMatrix solve_in_basis(const RatMatrix& basis, const RatMatrix& target);

/// Block-diagonal sum diag(a, b).
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
/// [a | b]
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
/// [a ; b]
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
/// Kronecker product a (x) b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Human-readable rendering for diagnostics and test failure messages.
std::string to_string(const RatMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace schober
