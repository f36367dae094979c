#include "hodgecone/qpoly.hpp"

#include <sstream>
#include <vector>

namespace hodgecone {

QPolynomial QPolynomial::monomial(int exp, long long coeff) {
  QPolynomial p;
  p.add_term(exp, coeff);
  return p;
}

void QPolynomial::add_term(int exp, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_[exp] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

long long QPolynomial::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int QPolynomial::min_exp() const {
  if (terms_.empty()) throw InputError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int QPolynomial::max_exp() const {
  if (terms_.empty()) throw InputError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

bool QPolynomial::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

long long QPolynomial::eval_at_one() const {
  long long t = 0;
  for (const auto& [e, c] : terms_) t += c;
  return t;
}

QPolynomial QPolynomial::substitute_power(int power) const {
  QPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e * power, c);
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      os << v;
    } else {
      if (v != 1) os << v << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

QPolynomial q_binomial(int a, int b) {
  if (b < 0 || b > a) throw InputError("q_binomial needs a >= b >= 0");
  if (b == 0 || b == a) return QPolynomial::one();
  // binom(a,b) = binom(a-1,b-1) + q^b * binom(a-1,b)
  return q_binomial(a - 1, b - 1) +
         QPolynomial::monomial(b) * q_binomial(a - 1, b);
}

namespace {

// [m]_q = 1 + q + ... + q^{m-1}
std::vector<long long> q_integer(int m) {
  return std::vector<long long>(static_cast<size_t>(m), 1);
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of dense polynomials; throws if the remainder is nonzero.
std::vector<long long> poly_div(std::vector<long long> num,
                                const std::vector<long long>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return {};
  if (num.size() < den.size()) throw InputError("inexact polynomial division");
  std::vector<long long> out(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    long long lead = num[i + den.size() - 1];
    if (lead % den.back() != 0)
      throw InputError("inexact polynomial division");
    long long f = lead / den.back();
    out[i] = f;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (long long c : num)
    if (c != 0) throw InputError("inexact polynomial division");
  return out;
}

}  // namespace

QPolynomial q_binomial_by_division(int a, int b) {
  if (b < 0 || b > a) throw InputError("q_binomial needs a >= b >= 0");
  std::vector<long long> num{1}, den{1};
  for (int i = 1; i <= b; ++i) {
    num = poly_mul(num, q_integer(a - b + i));
    den = poly_mul(den, q_integer(i));
  }
  auto quot = poly_div(std::move(num), den);
  QPolynomial out;
  for (size_t i = 0; i < quot.size(); ++i)
    out.add_term(static_cast<int>(i), quot[i]);
  return out;
}

}  // namespace hodgecone
