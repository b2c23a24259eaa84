#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "vsl/numeric.hpp"

namespace vsl {

/**
 * Dual integer u + e*s where s is nilpotent of order two: s*s = 0.
 *
 * The ring is Z[s]/(s^2); products therefore keep only the first-order
 * term in s.  An element is invertible exactly when its unit part is +-1,
 * and then (u + e*s)^(-1) = u - e*s.
 */
class Dual {
 public:
  Dual() : u_(0), e_(0) {}
  Dual(int u) : u_(u), e_(0) {}
  Dual(long u) : u_(u), e_(0) {}
  Dual(Int u) : u_(std::move(u)), e_(0) {}
  Dual(Int u, Int e) : u_(std::move(u)), e_(std::move(e)) {}

  // The nilpotent generator s itself.
  static Dual s() { return Dual(0, 1); }

  const Int& unit() const { return u_; }
  const Int& eps() const { return e_; }

  bool is_zero() const { return u_ == 0 && e_ == 0; }
  bool is_invertible() const { return u_ == 1 || u_ == -1; }

  Dual inverse() const {
    if (!is_invertible())
      throw std::domain_error("dual number with unit part " + int_str(u_) + " has no inverse");
    return Dual(u_, -e_);
  }

  Dual operator-() const { return Dual(-u_, -e_); }
  Dual& operator+=(const Dual& o) {
    u_ += o.u_;
    e_ += o.e_;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    u_ -= o.u_;
    e_ -= o.e_;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    e_ = u_ * o.e_ + e_ * o.u_;  // s^2 term is dropped
    u_ *= o.u_;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.u_ == b.u_ && a.e_ == b.e_; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

  // Matches the usual written form: "1-s", "2s", "-1+3s", "0".
  std::string to_string() const {
    if (u_ == 0 && e_ == 0) return "0";
    std::string out;
    if (u_ != 0) out += int_str(u_);
    if (e_ != 0) {
      if (e_ > 0 && !out.empty()) out += "+";
      if (e_ == -1)
        out += "-";
      else if (e_ != 1)
        out += int_str(e_);
      out += "s";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) { return os << d.to_string(); }

 private:
  Int u_, e_;
};

}  // namespace vsl

namespace Eigen {

// Must precede any Matrix<Dual> instantiation.
template <>
struct NumTraits<vsl::Dual> : GenericNumTraits<vsl::Dual> {
  typedef vsl::Dual Real;
  typedef vsl::Dual NonInteger;
  typedef vsl::Dual Nested;
  typedef vsl::Dual Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace vsl {

using DualMat = Eigen::Matrix<Dual, Eigen::Dynamic, Eigen::Dynamic>;

// "[[s, 1-s], [1+s, -s]]"
inline std::string to_string(const DualMat& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << (i + 1 < m.rows() ? "]," : "]");
  }
  os << "]";
  return os.str();
}

}  // namespace vsl
