#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "manin/error.hpp"
#include "manin/lie_algebra.hpp"
#include "manin/subspace.hpp"

namespace manin {

/// Sparse exact element of g^{(x)K}, keyed by basis-index tuples in lexicographic order.
template <std::size_t K>
class Tensor {
 public:
  using Key = std::array<std::size_t, K>;
  using Map = std::map<Key, Rational>;

  Tensor() = default;
  explicit Tensor(Algebra g) : g_(std::move(g)) {}

  const Algebra& algebra() const { return g_; }
  const LieAlgebra& g() const {
    if (!g_) throw StructuralError("tensor has no ambient algebra");
    return *g_;
  }

  void add(const Key& key, const Rational& c) {
    if (sgn(c) == 0) return;
    for (auto i : key)
      if (i >= g().dim()) throw StructuralError("tensor index out of range for " + g().id());
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Tensor& operator+=(const Tensor& o) {
    require_same(o);
    adopt(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same(o);
    adopt(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.terms_.empty()) return true;
    return same_ambient(a.g(), b.g());
  }

  void require_same(const Tensor& o) const {
    if (!g_) return;
    if (o.g_ && !same_ambient(*g_, *o.g_)) throw StructuralError("tensors over different algebras");
  }
  void adopt(const Tensor& o) {
    if (!g_) g_ = o.g_;
  }

 private:
  Algebra g_;
  Map terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

Tensor2 tensor_product(const Algebra& g, const LieElement& a, const LieElement& b);
/// a^b := a(x)b - b(x)a, no 1/2 factor.
Tensor2 wedge(const Algebra& g, const LieElement& a, const LieElement& b);
Tensor3 tensor_product(const Algebra& g, const LieElement& a, const LieElement& b, const LieElement& c);

/// t^{21}.
Tensor2 flip(const Tensor2& t);

/// (c (x) 1)(t) = sum t_ij <c, e_i> e_j, contracting the first leg through the form.
LieElement contract_first(const Tensor2& t, const LieElement& c);

/// [r^12, r^13] + [r^12, r^23] + [r^13, r^23].
Tensor3 cyb(const Tensor2& r);
/// [a^12, b^13] + [a^12, b^23] + [a^13, b^23]; mixed_bracket(t, t) == cyb(t).
Tensor3 mixed_bracket(const Tensor2& a, const Tensor2& b);

/// Moves leg k of t to position sigma[k] (so x^{231} is sigma = {1, 2, 0}).
Tensor3 permute_legs(const Tensor3& t, const std::array<int, 3>& sigma);
/// x^{123} + x^{231} + x^{312}.
Tensor3 alt3(const Tensor3& t);

/// [a(x)1 + 1(x)a, t].
Tensor2 ad_action2(const LieElement& a, const Tensor2& t);
/// ad_action2(b, t) == 0 for every basis vector b of s.
bool is_invariant(const Tensor2& t, const Subspace& s);
bool is_skew(const Tensor2& t);
bool is_symmetric(const Tensor2& t);

/// Applies the projection onto `complement` along `along` to every leg.
Tensor2 project_legs(const Tensor2& t, const Subspace& complement, const Subspace& along);
Tensor3 project_legs(const Tensor3& t, const Subspace& complement, const Subspace& along);
Tensor2 project_legs(const Tensor2& t, const Projection& p);
Tensor3 project_legs(const Tensor3& t, const Projection& p);
/// Different projections on the two legs.
Tensor2 project_legs(const Tensor2& t, const Projection& first, const Projection& second);

enum class Conjugation {
  forward,  ///< x -> g x g^{-1}
  inverse,  ///< x -> g^{-1} x g
};

/// Conjugates every leg by an invertible matrix. DomainError if singular.
Tensor2 conjugate(const Tensor2& t, const Matrix& g, Conjugation direction = Conjugation::forward);

}  // namespace manin
