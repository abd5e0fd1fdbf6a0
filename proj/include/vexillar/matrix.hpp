#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vexillar/rational.hpp"

namespace vexillar {

// Dense matrix over exact rationals, row-major. Immutable in spirit: the
// algorithms below never modify their arguments.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("RatMatrix: entry count mismatch");
  }

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& rhs) const;

  Rat trace() const;
  bool is_symmetric() const;

  const std::vector<Rat>& entries() const { return a_; }
  std::vector<Rat>& entries() { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Dense integer matrix, used for lattice bases and Hermite normal forms.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count mismatch");
  }

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }
  bool operator<(const IntMatrix& rhs) const;

  RatMatrix to_rational() const;

  const std::vector<Int>& entries() const { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

std::size_t rank(const RatMatrix& m);
Rat det(const RatMatrix& m);

// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& m,
                                      const std::vector<Rat>& b);

// Inverse of a square nonsingular matrix; throws on singular input.
RatMatrix inverse(const RatMatrix& m);

struct LdlResult {
  RatMatrix l;             // unit lower triangular
  std::vector<Rat> diag;   // positive diagonal of D
};

// Exact G = L D L^T factorization; throws std::domain_error when G is not
// symmetric positive definite.
LdlResult ldl(const RatMatrix& g);

// Orthogonal projector onto the column span of b: b (b^T b)^{-1} b^T.
// Throws std::domain_error when the columns are dependent.
RatMatrix projector(const RatMatrix& b);

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result has exactly rank(m) rows.
IntMatrix hnf(const IntMatrix& m);

struct HnfTransform {
  IntMatrix h;  // the HNF, zero rows kept
  IntMatrix u;  // unimodular, u * m = h
  std::size_t rank;
};

HnfTransform hnf_with_transform(const IntMatrix& m);

// Integer basis of { y : m y^T = 0 }, as rows. May have zero rows.
IntMatrix int_kernel(const IntMatrix& m);

// Basis (rows, HNF-canonical) of the saturation Z^n ∩ spanQ(rows of m).
IntMatrix saturate(const IntMatrix& m);

}  // namespace vexillar
