#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace argen {

// Arithmetic context for the prime field F_p. The prime is validated at
// construction; elements are residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  // Reduce an arbitrary signed integer to its residue.
  std::uint32_t residue(long long v) const;

  static bool is_prime(std::uint32_t p);

 private:
  std::uint32_t p_;
};

// Dense row-major matrix over F_p. 0xn and nx0 matrices are legal.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(2) {}
  Mat(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), field_(p), e_(rows * cols, 0) {}

  static Mat identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return field_.prime(); }
  const PrimeField& field() const { return field_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  std::uint32_t& operator()(std::size_t r, std::size_t c) {
    return e_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, long long v) {
    e_[r * cols_ + c] = field_.residue(v);
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && prime() == o.prime() &&
           e_ == o.e_;
  }

  bool is_zero() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(std::uint32_t c) const;
  Mat transposed() const;
  Mat pow(std::size_t k) const;  // square matrices

  // Columns of `o` appended to the right (same row count).
  Mat hstacked(const Mat& o) const;
  // Rows of `o` appended below (same column count).
  Mat vstacked(const Mat& o) const;
  Mat col(std::size_t c) const;
  Mat cols_slice(std::size_t first, std::size_t count) const;
  Mat rows_slice(std::size_t first, std::size_t count) const;

  // Flatten row-major into a 1 x (rows*cols) vector; used to treat spaces of
  // matrices as coordinate spaces.
  Mat flattened() const;
  static Mat unflatten(const Mat& flat, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint32_t> e_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row-echelon form; deterministic (leftmost pivots, unit leading
// entries, pivot columns cleared).
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// One solution x of a*x = b (matrix right-hand sides allowed), or nullopt.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Columns form a basis of ker a; column count = cols(a) - rank(a).
Mat nullspace(const Mat& a);

// Basis of the column space, as columns (the pivot columns of a).
Mat column_space(const Mat& m);

bool is_invertible(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

}  // namespace argen
