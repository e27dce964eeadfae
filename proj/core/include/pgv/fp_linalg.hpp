#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint32_t n);

/// Throws unless p is a prime not exceeding 2^15.
void require_prime(std::uint32_t p);

Residue fp_inv(Residue a, std::uint32_t p);
Residue fp_pow(Residue a, std::uint64_t e, std::uint32_t p);

inline Residue fp_add(Residue a, Residue b, std::uint32_t p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue fp_sub(Residue a, Residue b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
inline Residue fp_mul(Residue a, Residue b, std::uint32_t p) { return (a * b) % p; }
inline Residue fp_neg(Residue a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

// dst += c * src, entrywise mod p
void axpy(std::span<Residue> dst, Residue c, std::span<const Residue> src, std::uint32_t p);
void scale(std::span<Residue> v, Residue c, std::uint32_t p);
bool is_zero(std::span<const Residue> v);
Residue dot(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p);

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  std::vector<Vec> row_list() const;

  void append_row(std::span<const Residue> v);

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  bool operator==(const FpMatrix& o) const = default;

  FpMatrix transpose() const;
  /// Row vector times matrix.
  Vec left_apply(std::span<const Residue> v) const;
  /// Matrix times column vector.
  Vec right_apply(std::span<const Residue> v) const;

  const Vec& data() const { return data_; }

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Incremental row reduction. Rows are kept in semi-echelon form in insertion
/// order; to_rref() produces the canonical reduced basis.
class EchelonBuilder {
 public:
  EchelonBuilder(std::uint32_t p, std::size_t cols);

  /// Returns true when v was independent of the rows seen so far.
  bool insert(std::span<const Residue> v);
  /// Reduces v in place against the current rows.
  void reduce(std::span<Residue> v) const;
  bool contains(std::span<const Residue> v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }
  const std::vector<Vec>& rows() const { return rows_; }

  FpMatrix to_rref() const;

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row or -1
};

/// A subspace of F_p^n held as a reduced row echelon basis.
class FpSubspace {
 public:
  FpSubspace() = default;
  FpSubspace(std::uint32_t p, std::size_t ambient);

  static FpSubspace span(std::uint32_t p, std::size_t ambient, const std::vector<Vec>& vectors);
  static FpSubspace from_builder(const EchelonBuilder& b);
  static FpSubspace full(std::uint32_t p, std::size_t ambient);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpMatrix basis_matrix() const { return FpMatrix::from_rows(p_, ambient_, basis_); }

  /// v minus its projection along the pivot columns; zero iff v is contained.
  Vec reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const FpSubspace& other) const;
  /// Coordinates of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Residue> v) const;

  FpSubspace sum(const FpSubspace& o) const;
  FpSubspace intersect(const FpSubspace& o) const;
  /// dim(this) - dim(sub); throws "not a subspace" unless sub is contained.
  std::size_t quotient_dim(const FpSubspace& sub) const;

  bool operator==(const FpSubspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::uint32_t p_ = 2;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0} for column vectors v.
FpSubspace kernel(const FpMatrix& m);
/// {v : v m = 0} for row vectors v.
FpSubspace left_kernel(const FpMatrix& m);
/// Row space of m.
FpSubspace row_space(const FpMatrix& m);

/// Canonical solution of a x = b with free variables set to zero.
std::optional<Vec> solve(const FpMatrix& a, std::span<const Residue> b);

/// Vectors of the echelon complement: the first vectors (in order) of `candidates`
/// that are independent modulo `base` and of each other.
std::vector<Vec> complement_in_order(const FpSubspace& base, const std::vector<Vec>& candidates);

}  // namespace pgv
