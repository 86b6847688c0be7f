#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexcount/bigint.hpp"

namespace lexcount {

/// Dense univariate polynomial with exact integer coefficients; index is the
/// power of the variable. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> cs) {
    for (long long c : cs) coeffs_.emplace_back(c);
    trim();
  }
  explicit Polynomial(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { trim(); }

  static Polynomial monomial(BigInt c, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigInt> cs(k + 1);
    cs[k] = std::move(c);
    return Polynomial(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt operator[](int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : BigInt(0); }

  /// Lowest power with a nonzero coefficient, -1 for the zero polynomial.
  int min_degree() const {
    for (int k = 0; k <= degree(); ++k)
      if (coeffs_[k] != 0) return k;
    return -1;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(cs));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  BigInt eval(const BigInt& x) const {
    BigInt v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
  }

  /// "1 - 4x - x^2"; the zero polynomial prints as "0".
  std::string pretty(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Exact quotient a / b; throws when b does not divide a over the integers.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  const BigInt& lead = b.coeffs().back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const BigInt& top = rem[k + b.degree()];
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / lead;
    if (q[k] == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q[k] * b.coeffs()[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(q));
}

}  // namespace lexcount
