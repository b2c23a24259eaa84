#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vsl/numeric.hpp"

namespace vsl {

/**
 * Laurent polynomial in one variable t with integer coefficients,
 * stored sparsely as exponent -> coefficient (zero coefficients dropped).
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { set(0, Int(c)); }
  LaurentPoly(Int c) { set(0, std::move(c)); }

  static LaurentPoly monomial(long exp, Int coeff = Int(1)) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
  }
  static LaurentPoly t() { return monomial(1); }
  static LaurentPoly t_inv() { return monomial(-1); }

  bool is_zero() const { return c_.empty(); }

  Int coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
  }

  const std::map<long, Int>& terms() const { return c_; }

  // Value at t = 1: the coefficient sum.
  Int eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  bool is_monomial() const { return c_.size() == 1; }

  // Only monomials with coefficient +-1 are invertible over Z.
  LaurentPoly inverse() const {
    if (c_.size() != 1 || (c_.begin()->second != 1 && c_.begin()->second != -1))
      throw std::domain_error("laurent polynomial is not an invertible monomial: " + to_string());
    return monomial(-c_.begin()->first, c_.begin()->second);
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) + c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) - c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Descending exponents: "1-t^-1", "t", "2t^2+1".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (c > 0 && !out.empty()) out += "+";
      if (c == -1)
        out += "-";
      else if (c != 1 || e == 0)
        out += int_str(c);
      if (e != 0) {
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  void set(long exp, Int coeff) {
    if (coeff == 0)
      c_.erase(exp);
    else
      c_[exp] = std::move(coeff);
  }

  std::map<long, Int> c_;
};

}  // namespace vsl

namespace Eigen {

// Must precede any Matrix<LaurentPoly> instantiation.
template <>
struct NumTraits<vsl::LaurentPoly> : GenericNumTraits<vsl::LaurentPoly> {
  typedef vsl::LaurentPoly Real;
  typedef vsl::LaurentPoly NonInteger;
  typedef vsl::LaurentPoly Nested;
  typedef vsl::LaurentPoly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace vsl {

using LaurentMat = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

inline std::string to_string(const LaurentMat& m) {
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
