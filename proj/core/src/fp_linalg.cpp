#include "pgv/fp_linalg.hpp"

#include <algorithm>

namespace pgv {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint32_t p) {
  if (p > (1u << 15) || !is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not a supported prime");
}

Residue fp_pow(Residue a, std::uint64_t e, std::uint32_t p) {
  Residue r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue fp_inv(Residue a, std::uint32_t p) {
  if (a % p == 0) throw Error("inverse of zero");
  return fp_pow(a, p - 2, p);
}

void axpy(std::span<Residue> dst, Residue c, std::span<const Residue> src, std::uint32_t p) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (p == 2) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale(std::span<Residue> v, Residue c, std::uint32_t p) {
  for (auto& x : v) x = fp_mul(x, c, p);
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Residue dot(std::span<const Residue> a, std::span<const Residue> b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::uint64_t(a[i]) * b[i];
  return Residue(s % p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec FpMatrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

std::vector<Vec> FpMatrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

void FpMatrix::append_row(std::span<const Residue> v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error("dimension mismatch in product");
  FpMatrix out(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Residue a = (*this)(i, k);
      if (a) axpy(out.row(i), a, o.row(k), p_);
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch in sum");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp_add(data_[i], o.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch in difference");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp_sub(data_[i], o.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec FpMatrix::left_apply(std::span<const Residue> v) const {
  if (v.size() != rows_) throw Error("dimension mismatch in vector product");
  Vec out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    if (v[i]) axpy(out, v[i], row(i), p_);
  return out;
}

Vec FpMatrix::right_apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw Error("dimension mismatch in vector product");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v, p_);
  return out;
}

RrefResult rref(const FpMatrix& m) {
  RrefResult res{m, 0, {}};
  FpMatrix& a = res.reduced;
  const std::uint32_t p = m.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    scale(a.row(r), fp_inv(a(r, c), p), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a(i, c)) axpy(a.row(i), fp_neg(a(i, c), p), a.row(r), p);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FpMatrix& m) {
  EchelonBuilder b(m.p(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.insert(m.row(i));
  return b.rank();
}

EchelonBuilder::EchelonBuilder(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_row_(cols, -1) {
  require_prime(p);
}

void EchelonBuilder::reduce(std::span<Residue> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = v[pivots_[i]];
    if (c) axpy(v, fp_neg(c, p_), rows_[i], p_);
  }
}

bool EchelonBuilder::insert(std::span<const Residue> v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  if (rows_.size() == cols_) return false;
  Vec w(v.begin(), v.end());
  reduce(w);
  auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (it == w.end()) return false;
  std::size_t piv = std::size_t(it - w.begin());
  scale(w, fp_inv(*it, p_), p_);
  pivot_row_[piv] = std::int64_t(rows_.size());
  pivots_.push_back(piv);
  rows_.push_back(std::move(w));
  return true;
}

bool EchelonBuilder::contains(std::span<const Residue> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return is_zero(w);
}

FpMatrix EchelonBuilder::to_rref() const {
  return rref(FpMatrix::from_rows(p_, cols_, rows_)).reduced;
}

FpSubspace::FpSubspace(std::uint32_t p, std::size_t ambient) : p_(p), ambient_(ambient) { require_prime(p); }

FpSubspace FpSubspace::from_builder(const EchelonBuilder& b) {
  FpSubspace s(b.p(), b.cols());
  auto r = rref(FpMatrix::from_rows(b.p(), b.cols(), b.rows()));
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row_vec(i));
  s.pivots_ = r.pivots;
  return s;
}

FpSubspace FpSubspace::span(std::uint32_t p, std::size_t ambient, const std::vector<Vec>& vectors) {
  EchelonBuilder b(p, ambient);
  for (const auto& v : vectors) b.insert(v);
  return from_builder(b);
}

FpSubspace FpSubspace::full(std::uint32_t p, std::size_t ambient) {
  FpSubspace s(p, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec FpSubspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_) throw Error("vector length mismatch");
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Residue c = w[pivots_[i]];
    if (c) axpy(w, fp_neg(c, p_), basis_[i], p_);
  }
  return w;
}

bool FpSubspace::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

bool FpSubspace::contains(const FpSubspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::optional<Vec> FpSubspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

FpSubspace FpSubspace::sum(const FpSubspace& o) const {
  if (o.ambient_ != ambient_ || o.p_ != p_) throw Error("ambient mismatch");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(p_, ambient_, all);
}

FpSubspace FpSubspace::intersect(const FpSubspace& o) const {
  if (o.ambient_ != ambient_ || o.p_ != p_) throw Error("ambient mismatch");
  // x in both iff x = a A = b B; solve [A; -B]^T kernel on (a, b)
  const std::size_t da = dim(), db = o.dim();
  FpMatrix stacked(p_, da + db, ambient_);
  for (std::size_t i = 0; i < da; ++i) std::copy(basis_[i].begin(), basis_[i].end(), stacked.row(i).begin());
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked(da + i, j) = fp_neg(o.basis_[i][j], p_);
  FpSubspace k = left_kernel(stacked);
  std::vector<Vec> vecs;
  for (const auto& c : k.basis()) {
    Vec x(ambient_, 0);
    for (std::size_t i = 0; i < da; ++i)
      if (c[i]) axpy(x, c[i], basis_[i], p_);
    vecs.push_back(std::move(x));
  }
  return span(p_, ambient_, vecs);
}

std::size_t FpSubspace::quotient_dim(const FpSubspace& sub) const {
  if (!contains(sub)) throw Error("not a subspace");
  return dim() - sub.dim();
}

FpSubspace kernel(const FpMatrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = fp_neg(r.reduced(i, f), m.p());
    vecs.push_back(std::move(v));
  }
  return FpSubspace::span(m.p(), n, vecs);
}

FpSubspace left_kernel(const FpMatrix& m) { return kernel(m.transpose()); }

FpSubspace row_space(const FpMatrix& m) {
  EchelonBuilder b(m.p(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.insert(m.row(i));
  return FpSubspace::from_builder(b);
}

std::optional<Vec> solve(const FpMatrix& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw Error("right-hand side length mismatch");
  FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % a.p();
  }
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

std::vector<Vec> complement_in_order(const FpSubspace& base, const std::vector<Vec>& candidates) {
  EchelonBuilder b(base.p(), base.ambient_dim());
  for (const auto& v : base.basis()) b.insert(v);
  std::vector<Vec> out;
  for (const auto& v : candidates)
    if (b.insert(v)) out.push_back(v);
  return out;
}

}  // namespace pgv
