#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sctrl {

/// Element of the prime field Z/PZ. Usable as an Eigen scalar.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2 && P < (std::uint32_t{1} << 31), "modulus must fit in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(int v) : value_(reduce(static_cast<std::int64_t>(v))) {}  // NOLINT
  static constexpr Zp from_u64(std::uint64_t v) {
    Zp z;
    z.value_ = static_cast<std::uint32_t>(v % P);
    return z;
  }

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr Zp operator+(Zp a, Zp b) {
    std::uint32_t s = a.value_ + b.value_;
    if (s >= P) s -= P;
    return raw(s);
  }
  friend constexpr Zp operator-(Zp a, Zp b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + P - b.value_);
  }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % P));
  }
  friend constexpr Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw(value_ == 0 ? 0 : P - value_); }

  constexpr Zp& operator+=(Zp o) { return *this = *this + o; }
  constexpr Zp& operator-=(Zp o) { return *this = *this - o; }
  constexpr Zp& operator*=(Zp o) { return *this = *this * o; }
  constexpr Zp& operator/=(Zp o) { return *this = *this / o; }

  friend constexpr bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.value_ != b.value_; }

  constexpr bool is_zero() const { return value_ == 0; }

  /// Multiplicative inverse by Fermat; the inverse of zero is zero.
  constexpr Zp inverse() const {
    Zp base = *this;
    Zp acc = 1;
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1U) acc *= base;
      base *= base;
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp z) { return os << z.value_; }

 private:
  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.value_ = v;
    return z;
  }
  static constexpr std::uint32_t reduce(std::int64_t v) {
    const std::int64_t m = v % static_cast<std::int64_t>(P);
    return static_cast<std::uint32_t>(m < 0 ? m + P : m);
  }

  std::uint32_t value_ = 0;
};

/// The field every realization lives in: p = 2^31 - 1.
inline constexpr std::uint32_t kOraclePrime = 2147483647U;
using Fp = Zp<kOraclePrime>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Rank over an exact field by row reduction with first-nonzero pivoting.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(rank));
    const Scalar inv = Scalar(1) / m(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c) == Scalar(0)) continue;
      const Scalar f = m(r, c) * inv;
      for (Eigen::Index k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Linearly independent vectors kept in reduced form: every stored vector
/// has a 1 at its pivot and zeros at the pivots of earlier vectors.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index ambient_dim() const { return dim_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(vectors_.size()); }
  const std::vector<VectorX<Scalar>>& vectors() const { return vectors_; }

  /// Reduces `v` against the basis; returns true and stores it if it was
  /// independent.
  bool insert(VectorX<Scalar> v) {
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const Scalar f = v(pivots_[k]);
      if (f != Scalar(0)) v -= f * vectors_[k];
    }
    Eigen::Index pivot = 0;
    while (pivot < dim_ && v(pivot) == Scalar(0)) ++pivot;
    if (pivot == dim_) return false;
    v *= Scalar(1) / v(pivot);
    vectors_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  MatrixX<Scalar> as_matrix() const {
    MatrixX<Scalar> out(dim_, size());
    for (Eigen::Index k = 0; k < size(); ++k) out.col(k) = vectors_[static_cast<std::size_t>(k)];
    return out;
  }

 private:
  Eigen::Index dim_;
  std::vector<VectorX<Scalar>> vectors_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace sctrl

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<sctrl::Zp<P>> : GenericNumTraits<sctrl::Zp<P>> {
  using Real = sctrl::Zp<P>;
  using NonInteger = sctrl::Zp<P>;
  using Literal = sctrl::Zp<P>;
  using Nested = sctrl::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(static_cast<int>(P - 1)); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
