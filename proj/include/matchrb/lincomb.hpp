#pragma once

#include "matchrb/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <tuple>
#include <utility>

namespace matchrb {

/// Canonical iteration order for a basis type. Specializations define a
/// strict total order `operator()(a, b)` that is true when `a` is listed
/// before `b`. Every LinComb iterates in this order, which is what makes
/// printed output byte-stable.
template <class Basis>
struct CanonicalOrder;

template <class A, class B>
struct CanonicalOrder<std::pair<A, B>> {
  bool operator()(const std::pair<A, B>& lhs, const std::pair<A, B>& rhs) const {
    if (CanonicalOrder<A>{}(lhs.first, rhs.first)) return true;
    if (CanonicalOrder<A>{}(rhs.first, lhs.first)) return false;
    return CanonicalOrder<B>{}(lhs.second, rhs.second);
  }
};

template <class A, class B, class C>
struct CanonicalOrder<std::tuple<A, B, C>> {
  bool operator()(const std::tuple<A, B, C>& lhs, const std::tuple<A, B, C>& rhs) const {
    if (CanonicalOrder<A>{}(std::get<0>(lhs), std::get<0>(rhs))) return true;
    if (CanonicalOrder<A>{}(std::get<0>(rhs), std::get<0>(lhs))) return false;
    if (CanonicalOrder<B>{}(std::get<1>(lhs), std::get<1>(rhs))) return true;
    if (CanonicalOrder<B>{}(std::get<1>(rhs), std::get<1>(lhs))) return false;
    return CanonicalOrder<C>{}(std::get<2>(lhs), std::get<2>(rhs));
  }
};

/// A finite formal sum of basis elements with nonzero rational coefficients.
template <class Basis>
class LinComb {
 public:
  using Map = std::map<Basis, Rational, CanonicalOrder<Basis>>;
  using const_iterator = typename Map::const_iterator;
  using value_type = typename Map::value_type;

  LinComb() = default;
  explicit LinComb(Basis basis, Rational coeff = 1) { add_term(std::move(basis), coeff); }

  void add_term(const Basis& basis, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(basis, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_term(Basis&& basis, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(basis);
    if (it == terms_.end()) {
      terms_.emplace(std::move(basis), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds `scale * other`.
  void add_scaled(const LinComb& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [b, c] : other.terms_) add_term(b, scale * c);
  }

  Rational coefficient(const Basis& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  /// Removes and returns the first term in canonical order.
  value_type pop_first() {
    auto node = terms_.extract(terms_.begin());
    return {std::move(node.key()), std::move(node.mapped())};
  }

  LinComb& operator+=(const LinComb& other) {
    add_scaled(other, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    add_scaled(other, -1);
    return *this;
  }
  LinComb& operator*=(const Rational& scale) {
    if (scale == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= scale;
    }
    return *this;
  }

  friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
  friend LinComb operator-(LinComb v) { return v *= -1; }
  friend LinComb operator*(const Rational& scale, LinComb v) { return v *= scale; }

  friend bool operator==(const LinComb& lhs, const LinComb& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    auto it = rhs.terms_.begin();
    for (const auto& [b, c] : lhs.terms_) {
      if (!(b == it->first) || c != it->second) return false;
      ++it;
    }
    return true;
  }

 private:
  Map terms_;
};

template <class Basis>
using TensorComb = LinComb<std::pair<Basis, Basis>>;

template <class Basis>
using Tensor3Comb = LinComb<std::tuple<Basis, Basis, Basis>>;

template <class Basis>
LinComb<Basis> scale(const Rational& c, LinComb<Basis> v) {
  return v *= c;
}

/// Linear extension of `f : Basis -> LinComb<Target>`.
template <class Basis, class F>
auto map_basis(const LinComb<Basis>& v, F&& f) {
  using Result = std::invoke_result_t<F&, const Basis&>;
  Result out;
  for (const auto& [b, c] : v) out.add_scaled(f(b), c);
  return out;
}

/// Bilinear tensor of two combinations.
template <class Basis>
TensorComb<Basis> tensor(const LinComb<Basis>& a, const LinComb<Basis>& b) {
  TensorComb<Basis> out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) out.add_term({u, v}, cu * cv);
  return out;
}

/// Factor-wise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd, given a bilinear product
/// on basis elements `mul : (Basis, Basis) -> LinComb<Basis>`.
template <class Basis, class Mul>
TensorComb<Basis> tensor_product(const TensorComb<Basis>& lhs, const TensorComb<Basis>& rhs,
                                 Mul&& mul) {
  TensorComb<Basis> out;
  for (const auto& [p, cp] : lhs) {
    for (const auto& [q, cq] : rhs) {
      auto left = mul(p.first, q.first);
      if (left.is_zero()) continue;
      auto right = mul(p.second, q.second);
      const Rational c = cp * cq;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add_term({l, r}, c * cl * cr);
    }
  }
  return out;
}

/// Applies `f` to the left or right leg of every tensor term, linearly.
template <class Basis, class F>
TensorComb<Basis> map_left(const TensorComb<Basis>& t, F&& f) {
  TensorComb<Basis> out;
  for (const auto& [p, c] : t)
    for (const auto& [l, cl] : f(p.first)) out.add_term({l, p.second}, c * cl);
  return out;
}

template <class Basis, class F>
TensorComb<Basis> map_right(const TensorComb<Basis>& t, F&& f) {
  TensorComb<Basis> out;
  for (const auto& [p, c] : t)
    for (const auto& [r, cr] : f(p.second)) out.add_term({p.first, r}, c * cr);
  return out;
}

}  // namespace matchrb
