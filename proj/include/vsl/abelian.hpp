#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsl/numeric.hpp"

namespace vsl {

/**
 * Finitely generated abelian group Z^free_rank x Z/d_1 x ... x Z/d_k.
 *
 * Elements are coordinate vectors of length free_rank + k, free coordinates
 * first; torsion coordinates are kept reduced to [0, d_i).  Moduli are kept
 * in the order they were constructed (not forced into invariant-factor form).
 */
struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // each modulus >= 2

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup integers() { return {1, {}}; }
  static FgAbelianGroup cyclic(Int m) {
    if (m < 2) throw std::invalid_argument("cyclic group modulus must be >= 2");
    return {0, {std::move(m)}};
  }

  int dim() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_trivial() const { return dim() == 0; }

  bool has_two_torsion() const {
    for (const auto& d : torsion)
      if (d % 2 == 0) return true;
    return false;
  }

  bool operator==(const FgAbelianGroup&) const = default;

  std::vector<Int> zero() const { return std::vector<Int>(dim(), Int(0)); }

  std::vector<Int> reduce(std::vector<Int> v) const {
    check_dim(v);
    for (size_t i = 0; i < torsion.size(); ++i) {
      auto& c = v[free_rank + i];
      c = mod_floor(c, torsion[i]);
    }
    return v;
  }

  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    check_dim(a);
    check_dim(b);
    std::vector<Int> r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
  }

  std::vector<Int> negate(const std::vector<Int>& a) const {
    check_dim(a);
    std::vector<Int> r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
  }

  std::vector<Int> scale(const Int& k, const std::vector<Int>& a) const {
    check_dim(a);
    std::vector<Int> r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = k * a[i];
    return reduce(std::move(r));
  }

  // k times the generator of a one-coordinate group (Z or Z/m).
  std::vector<Int> from_scalar(const Int& k) const {
    if (dim() != 1)
      throw std::invalid_argument("from_scalar needs a one-coordinate group, got " + to_string());
    return reduce({k});
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1)
      out = "Z";
    else if (free_rank > 1)
      out = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
      if (!out.empty()) out += " x ";
      out += "Z/" + int_str(d);
    }
    return out;
  }

  // "[2]" for rank-1 groups, "[1,0,3]" in general.
  std::string element_to_string(const std::vector<Int>& v) const {
    check_dim(v);
    std::string out = "[";
    for (int i = 0; i < dim(); ++i) {
      if (i) out += ",";
      out += int_str(v[i]);
    }
    return out + "]";
  }

 private:
  void check_dim(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != dim())
      throw std::invalid_argument("element has " + std::to_string(v.size()) +
                                  " coordinates, group " + to_string() + " needs " +
                                  std::to_string(dim()));
  }
};

/**
 * Element of the integral group ring Z[A] for a finitely generated abelian
 * group A: a finite formal sum of group elements with integer multiplicities.
 * Terms are kept in lexicographic coordinate order, which fixes the printed
 * form of every value.
 */
class GroupRingElem {
 public:
  explicit GroupRingElem(FgAbelianGroup group) : group_(std::move(group)) {}

  const FgAbelianGroup& group() const { return group_; }
  const std::map<std::vector<Int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<Int>& elem, const Int& mult) {
    if (mult == 0) return;
    auto key = group_.reduce(elem);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), mult);
    } else {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    if (group_ != o.group_)
      throw std::invalid_argument("group ring elements live over different groups: " +
                                  group_.to_string() + " vs " + o.group_.to_string());
    for (const auto& [e, m] : o.terms_) add(e, m);
    return *this;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }

  GroupRingElem operator-() const {
    GroupRingElem r(group_);
    for (const auto& [e, m] : terms_) r.terms_.emplace(e, -m);
    return r;
  }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a += -b; }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

  // "1*[-1] + 2*[0] + 1*[1]"; the zero sum prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, m] : terms_) {
      if (!out.empty()) out += " + ";
      out += int_str(m) + "*" + group_.element_to_string(e);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const GroupRingElem& g) {
    return os << g.to_string();
  }

 private:
  FgAbelianGroup group_;
  std::map<std::vector<Int>, Int> terms_;
};

}  // namespace vsl
