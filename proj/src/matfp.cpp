#include "argen/matfp.hpp"

#include <stdexcept>

namespace argen {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not prime");
  }
}

bool PrimeField::is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: zero");
  // Extended Euclid.
  long long t = 0, newt = 1;
  long long r = p_, newr = a % p_;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::residue(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

Mat Mat::identity(std::size_t n, std::uint32_t p) {
  Mat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

static void check_same_shape(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.prime() != b.prime())
    throw std::invalid_argument("Mat: shape or field mismatch");
}

Mat Mat::operator+(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r(rows_, cols_, prime());
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = field_.add(e_[i], o.e_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r(rows_, cols_, prime());
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = field_.sub(e_[i], o.e_[i]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || prime() != o.prime())
    throw std::invalid_argument("Mat::operator*: shape or field mismatch");
  Mat r(rows_, o.cols_, prime());
  const std::uint64_t p = prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint64_t v = r(i, j) + a * o(k, j) % p;
        r(i, j) = static_cast<std::uint32_t>(v >= p ? v - p : v);
      }
    }
  }
  return r;
}

Mat Mat::scaled(std::uint32_t c) const {
  Mat r(rows_, cols_, prime());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], c);
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_, prime());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::pow(std::size_t k) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: not square");
  Mat acc = identity(rows_, prime());
  Mat base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Mat Mat::hstacked(const Mat& o) const {
  if (rows_ != o.rows_ || prime() != o.prime())
    throw std::invalid_argument("Mat::hstacked: mismatch");
  Mat r(rows_, cols_ + o.cols_, prime());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Mat Mat::vstacked(const Mat& o) const {
  if (cols_ != o.cols_ || prime() != o.prime())
    throw std::invalid_argument("Mat::vstacked: mismatch");
  Mat r(rows_ + o.rows_, cols_, prime());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

Mat Mat::col(std::size_t c) const { return cols_slice(c, 1); }

Mat Mat::cols_slice(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("Mat::cols_slice");
  Mat r(rows_, count, prime());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

Mat Mat::rows_slice(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("Mat::rows_slice");
  Mat r(count, cols_, prime());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
  return r;
}

Mat Mat::flattened() const {
  Mat r(1, rows_ * cols_, prime());
  for (std::size_t i = 0; i < e_.size(); ++i) r(0, i) = e_[i];
  return r;
}

Mat Mat::unflatten(const Mat& flat, std::size_t rows, std::size_t cols) {
  if (flat.rows() != 1 || flat.cols() != rows * cols)
    throw std::invalid_argument("Mat::unflatten: size mismatch");
  Mat r(rows, cols, flat.prime());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = flat(0, i * cols + j);
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  Mat a = m;
  const PrimeField& f = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    }
    std::uint32_t s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      std::uint32_t t = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) = f.sub(a(i, j), f.mul(t, a(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(a);
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.prime() != b.prime())
    throw std::invalid_argument("solve: shape mismatch");
  RrefResult r = rref(a.hstacked(b));
  // Any pivot landing in the b-block means inconsistency.
  for (auto p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols(), a.prime());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    std::size_t pc = r.pivots[i];
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(pc, j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

Mat nullspace(const Mat& a) {
  RrefResult r = rref(a);
  std::vector<std::size_t> freecols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c) {
        ++pi;
      } else {
        freecols.push_back(c);
      }
    }
  }
  Mat n(a.cols(), freecols.size(), a.prime());
  const PrimeField& f = a.field();
  for (std::size_t k = 0; k < freecols.size(); ++k) {
    std::size_t fc = freecols[k];
    n(fc, k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      n(r.pivots[i], k) = f.neg(r.reduced(i, fc));
  }
  return n;
}

Mat column_space(const Mat& m) {
  RrefResult r = rref(m);
  Mat b(m.rows(), r.pivots.size(), m.prime());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, r.pivots[k]);
  return b;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult r = rref(m.hstacked(Mat::identity(m.rows(), m.prime())));
  if (r.rank != m.rows()) return std::nullopt;
  // Left block is now the identity; right block is the inverse.
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (r.pivots[i] != i) return std::nullopt;
  return r.reduced.cols_slice(m.cols(), m.cols());
}

}  // namespace argen
