#pragma once

#include <map>
#include <string>

#include "hodgecone/errors.hpp"

namespace hodgecone {

// Sparse integer Laurent polynomial in q.  Negative exponents are legal
// internally (substitution q -> q^{-4} produces them); final results are
// checked for nonnegativity where required.
class QPolynomial {
public:
  QPolynomial() = default;
  static QPolynomial monomial(int exp, long long coeff = 1);
  static QPolynomial one() { return monomial(0); }

  void add_term(int exp, long long coeff);
  long long coeff(int exp) const;
  bool zero() const { return terms_.empty(); }
  const std::map<int, long long>& terms() const { return terms_; }

  int min_exp() const;
  int max_exp() const;
  bool nonnegative() const;  // all coefficients >= 0
  long long eval_at_one() const;

  // Substitutes q -> q^power (power may be negative).
  QPolynomial substitute_power(int power) const;

  QPolynomial& operator+=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string str() const;  // e.g. "q^4 + 2*q^6"

private:
  std::map<int, long long> terms_;
};

// Gaussian binomial coefficient in q, via the Pascal-type recurrence.
QPolynomial q_binomial(int a, int b);

// Independent route: product of cyclotomic-style quotients
// prod_{i=1}^{b} (1-q^{a-b+i})/(1-q^i), carried out by exact division.
QPolynomial q_binomial_by_division(int a, int b);

}  // namespace hodgecone
