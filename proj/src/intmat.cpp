#include "cluspat/intmat.hpp"

#include <optional>
#include <sstream>

namespace cluspat {

namespace {

void check_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
}

void check_direction(int k, int n, const char* op) {
  if (k < 1 || k > n)
    throw IndexOutOfRange(std::string(op) + ": index " + std::to_string(k) + " not in 1.." +
                          std::to_string(n));
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("IntMatrix: negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("IntMatrix: ragged rows");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(int rows, int cols) { return IntMatrix(rows, cols); }

std::size_t IntMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw IndexOutOfRange("IntMatrix: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  check_same_shape(*this, rhs, "matrix add");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  check_same_shape(*this, rhs, "matrix subtract");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DimensionMismatch("matrix multiply: " + std::to_string(cols_) + " columns vs " +
                            std::to_string(rhs.rows_) + " rows");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

IntMatrix positive_part(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) > 0) out(i, j) = m(i, j);
  return out;
}

IntMatrix row_restrict(const IntMatrix& m, int k) {
  check_direction(k, m.rows(), "row_restrict");
  IntMatrix out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) out(k - 1, j) = m(k - 1, j);
  return out;
}

IntMatrix col_restrict(const IntMatrix& m, int k) {
  check_direction(k, m.cols(), "col_restrict");
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) out(i, k - 1) = m(i, k - 1);
  return out;
}

IntMatrix j_matrix(int n, int l) {
  check_direction(l, n, "j_matrix");
  IntMatrix out = IntMatrix::identity(n);
  out(l - 1, l - 1) = -1;
  return out;
}

IntMatrix entrywise_max(const IntMatrix& a, const IntMatrix& b) {
  check_same_shape(a, b, "entrywise_max");
  IntMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) >= b(i, j) ? a(i, j) : b(i, j);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::vector<BigInt> skew_symmetrizer(const IntMatrix& m) {
  if (!m.is_square()) throw NotSkewSymmetrizable("skew_symmetrizer: matrix not square");
  int n = m.rows();
  for (int i = 0; i < n; ++i)
    if (m(i, i) != 0) throw NotSkewSymmetrizable("skew_symmetrizer: nonzero diagonal entry");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool zi = m(i, j) == 0, zj = m(j, i) == 0;
      if (zi != zj)
        throw NotSkewSymmetrizable("skew_symmetrizer: one-sided zero at (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
      if (!zi && sign_of(m(i, j)) == sign_of(m(j, i)))
        throw NotSkewSymmetrizable("skew_symmetrizer: entries (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") have matching signs");
    }

  // Propagate d_j / d_i = -m_ij / m_ji over each connected component, then
  // clear denominators to the primitive positive integer vector.
  std::vector<std::optional<BigRat>> ratio(n);
  std::vector<BigInt> d(n, BigInt(1));
  for (int root = 0; root < n; ++root) {
    if (ratio[root].has_value()) continue;
    std::vector<int> component;
    std::vector<int> stack{root};
    ratio[root] = BigRat(1);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      component.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (m(i, j) == 0) continue;
        BigInt num = m(i, j);
        BigInt den = -m(j, i);
        BigRat edge(num, den);
        edge.canonicalize();
        BigRat r = *ratio[i] * edge;
        if (!ratio[j].has_value()) {
          ratio[j] = r;
          stack.push_back(j);
        } else if (*ratio[j] != r) {
          throw NotSkewSymmetrizable("skew_symmetrizer: inconsistent ratio cycle through " +
                                     std::to_string(j));
        }
      }
    }
    BigInt denom_lcm(1);
    for (int i : component) denom_lcm = big_lcm(denom_lcm, ratio[i]->get_den());
    BigInt content(0);
    for (int i : component) {
      BigRat scaled = *ratio[i] * BigRat(denom_lcm);
      scaled.canonicalize();
      d[i] = scaled.get_num();
      content = big_gcd(content, d[i]);
    }
    if (content > 1)
      for (int i : component) d[i] = exact_quotient(d[i], content);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * m(i, j) != -d[j] * m(j, i))
        throw NotSkewSymmetrizable("skew_symmetrizer: no consistent positive diagonal");
  return d;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)), d_(skew_symmetrizer(b_)) {
  validate();
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b, std::vector<BigInt> d)
    : b_(std::move(b)), d_(std::move(d)) {
  validate();
}

void ExchangeMatrix::validate() const {
  if (!b_.is_square()) throw InvalidArgument("ExchangeMatrix: matrix not square");
  if (static_cast<int>(d_.size()) != b_.rows())
    throw DimensionMismatch("ExchangeMatrix: symmetrizer length mismatch");
  for (const auto& v : d_)
    if (v <= 0) throw InvalidArgument("ExchangeMatrix: symmetrizer entries must be positive");
  int n = b_.rows();
  for (int i = 0; i < n; ++i) {
    if (b_(i, i) != 0) throw InvalidArgument("ExchangeMatrix: diagonal must be zero");
    for (int j = 0; j < n; ++j)
      if (d_[i] * b_(i, j) != -d_[j] * b_(j, i))
        throw InvalidArgument("ExchangeMatrix: D*B is not skew-symmetric");
  }
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  check_direction(k, b.rows(), "mutate_matrix");
  int n = b.rows();
  int kk = k - 1;
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk)
        out(i, j) = -b(i, j);
      else
        out(i, j) = b(i, j) + positive_part(b(i, kk)) * b(kk, j) +
                    b(i, kk) * positive_part(-b(kk, j));
    }
  return out;
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const {
  return ExchangeMatrix(mutate_matrix(b_, k), d_);
}

ExchangeMatrix ExchangeMatrix::negated() const { return ExchangeMatrix(-b_, d_); }

ExchangeMatrix ExchangeMatrix::transposed() const {
  // D itself does not symmetrize B^T (the inverse-scaled diagonal does), so
  // recompute the canonical choice.
  return ExchangeMatrix(b_.transposed());
}

bool ExchangeMatrix::operator==(const ExchangeMatrix& rhs) const {
  return b_ == rhs.b_ && d_ == rhs.d_;
}

}  // namespace cluspat
