#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimerpf/error.hpp"
#include "dimerpf/rational.hpp"

namespace dimerpf {

// Variable ids shared across the library.
inline constexpr int kVarX = 0;  // monomer-pair fugacity
inline constexpr int kVarZ = 1;  // per-monomer fugacity, z^2 = x
inline constexpr int kFirstFreeVar = 2;

// Exponents are stored doubled so half-integers stay exact.
class Monomial {
 public:
  Monomial() = default;

  static Monomial power(int var, int twice_exponent) {
    Monomial m;
    if (twice_exponent != 0) m.powers_.emplace_back(var, twice_exponent);
    return m;
  }

  const std::vector<std::pair<int, int>>& powers() const { return powers_; }
  bool is_constant() const { return powers_.empty(); }

  int twice_exponent(int var) const {
    for (const auto& [v, e] : powers_)
      if (v == var) return e;
    return 0;
  }

  Monomial with(int var, int twice_exponent) const {
    Monomial m;
    bool placed = false;
    for (const auto& [v, e] : powers_) {
      if (!placed && v >= var) {
        if (twice_exponent != 0) m.powers_.emplace_back(var, twice_exponent);
        placed = true;
        if (v == var) continue;
      }
      m.powers_.emplace_back(v, e);
    }
    if (!placed && twice_exponent != 0) m.powers_.emplace_back(var, twice_exponent);
    return m;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial m;
    auto a = powers_.begin(), b = other.powers_.begin();
    while (a != powers_.end() || b != other.powers_.end()) {
      if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
        m.powers_.push_back(*a++);
      } else if (a == powers_.end() || b->first < a->first) {
        m.powers_.push_back(*b++);
      } else {
        int e = a->second + b->second;
        if (e != 0) m.powers_.emplace_back(a->first, e);
        ++a;
        ++b;
      }
    }
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> powers_;
};

using VarNamer = std::function<std::string(int)>;

inline std::string default_var_name(int var) {
  if (var == kVarX) return "x";
  if (var == kVarZ) return "z";
  return "v" + std::to_string(var);
}

inline std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) { add_term(Monomial(), c); }
  SparsePoly(long c) : SparsePoly(Rational(c)) {}
  SparsePoly(int c) : SparsePoly(Rational(c)) {}

  static SparsePoly variable(int var, const Rational& coef = 1, int twice_exponent = 2) {
    SparsePoly p;
    p.add_term(Monomial::power(var, twice_exponent), coef);
    return p;
  }

  static SparsePoly term(const Monomial& m, const Rational& c) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial()); }

  // Coefficient of var^(twice/2) in a univariate polynomial.
  Rational coefficient_of(int var, int twice_exponent) const {
    return coefficient(Monomial::power(var, twice_exponent));
  }

  void set_cap(int var, int twice_max) {
    caps_[var] = twice_max;
    for (auto it = terms_.begin(); it != terms_.end();)
      it = exceeds_caps(it->first) ? terms_.erase(it) : std::next(it);
  }
  const std::map<int, int>& caps() const { return caps_; }

  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0 || exceeds_caps(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    merge_caps(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    merge_caps(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    r.caps_ = a.caps_;
    r.merge_caps(b);
    if (a.is_constant() && !a.is_zero() && a.terms_.begin()->first.is_constant()) {
      const Rational& s = a.terms_.begin()->second;
      for (const auto& [m, c] : b.terms_) r.add_term(m, s * c);
      return r;
    }
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  int max_twice_degree(int var) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      int e = m.twice_exponent(var);
      if (first || e > best) best = e;
      first = false;
    }
    return best;
  }
  int min_twice_degree(int var) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      int e = m.twice_exponent(var);
      if (first || e < best) best = e;
      first = false;
    }
    return best;
  }

  bool only_uses(int var) const {
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.powers())
        if (v != var) return false;
    return true;
  }

  // True when the polynomial lies in Q[var] (integer, nonnegative exponents).
  bool is_polynomial_in(int var) const {
    if (!only_uses(var)) return false;
    for (const auto& [m, c] : terms_) {
      int e = m.twice_exponent(var);
      if (e < 0 || e % 2 != 0) return false;
    }
    return true;
  }

  Rational evaluate(int var, const Rational& value) const {
    if (!is_polynomial_in(var))
      fail(ErrorKind::InvalidArgument, "evaluate: not a polynomial in one variable");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) sum += c * rational_power(value, m.twice_exponent(var) / 2);
    return sum;
  }

  std::vector<Rational> dense_coefficients(int var) const {
    if (!is_polynomial_in(var))
      fail(ErrorKind::InvalidArgument, "dense_coefficients: not a polynomial in one variable");
    std::vector<Rational> out(is_zero() ? 0 : max_twice_degree(var) / 2 + 1, Rational(0));
    for (const auto& [m, c] : terms_) out[m.twice_exponent(var) / 2] = c;
    return out;
  }

  static SparsePoly from_dense(int var, const std::vector<Rational>& coefficients) {
    SparsePoly p;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      p.add_term(Monomial::power(var, 2 * static_cast<int>(k)), coefficients[k]);
    return p;
  }

  // Multiplies every exponent of `var` by num/den; the results must stay half-integers.
  SparsePoly scale_exponents(int var, int num, int den) const {
    SparsePoly p;
    for (const auto& [m, c] : terms_) {
      int e = m.twice_exponent(var) * num;
      if (e % den != 0) fail(ErrorKind::InvalidArgument, "scale_exponents: non half-integer result");
      p.add_term(m.with(var, e / den), c);
    }
    return p;
  }

  SparsePoly rename(int from, int to) const {
    SparsePoly p;
    for (const auto& [m, c] : terms_) {
      int e = m.twice_exponent(from);
      p.add_term(m.with(from, 0) * Monomial::power(to, e), c);
    }
    return p;
  }

  // Multiplies by var^(twice_delta/2).
  SparsePoly shift(int var, int twice_delta) const {
    SparsePoly p;
    Monomial s = Monomial::power(var, twice_delta);
    for (const auto& [m, c] : terms_) p.add_term(m * s, c);
    return p;
  }

  std::string to_string(const VarNamer& namer = default_var_name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coef = c.get_str();
      if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) out += "-";
      if (sgn(c) < 0) coef = Rational(-c).get_str();
      std::vector<std::string> factors;
      if (coef != "1" || m.is_constant()) factors.push_back(coef);
      for (const auto& [v, e] : m.powers()) {
        std::string f = namer(v);
        if (e != 2) f += "^" + (e > 0 && e % 2 == 0 ? format_half(e) : "(" + format_half(e) + ")");
        factors.push_back(f);
      }
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
  }

 private:
  bool exceeds_caps(const Monomial& m) const {
    if (caps_.empty()) return false;
    for (const auto& [v, e] : m.powers()) {
      auto it = caps_.find(v);
      if (it != caps_.end() && e > it->second) return true;
    }
    return false;
  }

  void merge_caps(const SparsePoly& o) {
    for (const auto& [v, e] : o.caps_) {
      auto [it, inserted] = caps_.try_emplace(v, e);
      if (!inserted) it->second = std::min(it->second, e);
    }
  }

  Terms terms_;
  std::map<int, int> caps_;
};

}  // namespace dimerpf
