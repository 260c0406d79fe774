#pragma once

// Sparse integer polynomials in x_1..x_n, keyed by exponent vector.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace shtab {

class QPolynomial {
 public:
  using Exponent = std::vector<int>;

  QPolynomial() = default;
  explicit QPolynomial(std::size_t vars) : vars_(vars) {}

  [[nodiscard]] std::size_t variables() const noexcept { return vars_; }
  [[nodiscard]] const std::map<Exponent, long long>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponent e, long long coeff) {
    if (e.size() != vars_) throw ContractViolation("exponent length differs from variable count");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  [[nodiscard]] long long coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  QPolynomial& operator*=(long long k) {
    if (k == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, long long k) { return a *= k; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    a.require_same(b);
    QPolynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.vars_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// x_k -> x_{perm[k]} (0-based permutation of the variables).
  [[nodiscard]] QPolynomial permuted(const std::vector<std::size_t>& perm) const {
    QPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent p(vars_);
      for (std::size_t k = 0; k < vars_; ++k) p[perm[k]] = e[k];
      out.add_term(std::move(p), c);
    }
    return out;
  }

  [[nodiscard]] bool is_symmetric() const {
    std::vector<std::size_t> perm(vars_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      if (!(permuted(perm) == *this)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }

  /// "2x1^3 + 4x1^2x2 + ..." with terms in decreasing lexicographic order.
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const long long a = c < 0 ? -c : c;
      const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      if (a != 1 || constant) out += std::to_string(a);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        out += "x" + std::to_string(k + 1);
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
      }
    }
    return out;
  }

 private:
  void require_same(const QPolynomial& o) const {
    if (o.vars_ != vars_) throw ContractViolation("polynomials in different variable counts");
  }

  std::size_t vars_ = 0;
  std::map<Exponent, long long> terms_;
};

}  // namespace shtab
