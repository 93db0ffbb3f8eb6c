#ifndef CLUSPAT_INTMAT_HPP
#define CLUSPAT_INTMAT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cluspat/bigint.hpp"

namespace cluspat {

// Dense matrix of exact integers.  Dimensions are fixed at construction.
// Entry access is 0-based; the mutation-direction arguments of the free
// functions below are 1-based, matching the usual labeling of T_n.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const BigInt& operator()(int i, int j) const { return entries_[index(i, j)]; }
  BigInt& operator()(int i, int j) { return entries_[index(i, j)]; }

  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  IntMatrix transposed() const;
  bool is_zero() const;

  std::string to_text() const;

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

// [M]_+ : entrywise max(m, 0).
IntMatrix positive_part(const IntMatrix& m);

// M^{k.} / M^{.k} : zero out everything outside row/column k (1-based).
IntMatrix row_restrict(const IntMatrix& m, int k);
IntMatrix col_restrict(const IntMatrix& m, int k);

// J_l : identity with the (l, l) entry replaced by -1 (1-based).
IntMatrix j_matrix(int n, int l);

IntMatrix entrywise_max(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// Componentwise-minimal positive diagonal D with D*M skew-symmetric.
// Ratios d_j/d_i are propagated over the graph of nonzero off-diagonal
// pairs; indices not touched by any nonzero pair get d = 1.  Throws
// NotSkewSymmetrizable when the sign pattern or a ratio cycle forbids it.
std::vector<BigInt> skew_symmetrizer(const IntMatrix& m);

// Skew-symmetrizable exchange matrix bundled with a positive diagonal
// skew-symmetrizer.  Construction from a bare matrix picks the canonical
// (componentwise-minimal) D; mutation keeps D, which stays valid.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMatrix b);
  ExchangeMatrix(IntMatrix b, std::vector<BigInt> d);

  int rank() const { return b_.rows(); }
  const IntMatrix& matrix() const { return b_; }
  const std::vector<BigInt>& symmetrizer() const { return d_; }

  // mu_k, 1-based direction; involutive; the symmetrizer carries over.
  ExchangeMatrix mutated(int k) const;
  ExchangeMatrix negated() const;
  // B^T with its own canonical symmetrizer.
  ExchangeMatrix transposed() const;

  bool operator==(const ExchangeMatrix& rhs) const;
  bool operator!=(const ExchangeMatrix& rhs) const { return !(*this == rhs); }

 private:
  void validate() const;

  IntMatrix b_;
  std::vector<BigInt> d_;
};

// b'_{ij} = -b_{ij} if i = k or j = k, else b_{ij} + [b_{ik}]_+ b_{kj} + b_{ik} [-b_{kj}]_+.
IntMatrix mutate_matrix(const IntMatrix& b, int k);

}  // namespace cluspat

#endif
