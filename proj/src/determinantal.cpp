#include "hodgecone/determinantal.hpp"

#include <sstream>

namespace hodgecone {

MatrixFamily parse_family(const std::string& s) {
  if (s == "generic") return MatrixFamily::Generic;
  if (s == "odd-skew") return MatrixFamily::OddSkew;
  if (s == "even-skew") return MatrixFamily::EvenSkew;
  if (s == "symmetric") return MatrixFamily::Symmetric;
  throw InputError("unknown matrix family: " + s);
}

std::string family_name(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::Generic: return "generic";
    case MatrixFamily::OddSkew: return "odd-skew";
    case MatrixFamily::EvenSkew: return "even-skew";
    case MatrixFamily::Symmetric: return "symmetric";
  }
  throw InputError("bad family");
}

void GrothendieckClassPoly::add(int s, const QPolynomial& p) {
  if (p.zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_[s] = p;
  } else {
    it->second += p;
    if (it->second.zero()) terms_.erase(it);
  }
}

int GrothendieckClassPoly::min_exp() const {
  if (terms_.empty()) throw InputError("min_exp of zero class");
  bool first = true;
  int m = 0;
  for (const auto& [s, p] : terms_) {
    if (first || p.min_exp() < m) m = p.min_exp();
    first = false;
  }
  return m;
}

int GrothendieckClassPoly::max_exp() const {
  if (terms_.empty()) throw InputError("max_exp of zero class");
  bool first = true;
  int m = 0;
  for (const auto& [s, p] : terms_) {
    if (first || p.max_exp() > m) m = p.max_exp();
    first = false;
  }
  return m;
}

bool GrothendieckClassPoly::nonnegative() const {
  for (const auto& [s, p] : terms_)
    if (!p.nonnegative()) return false;
  return true;
}

std::string GrothendieckClassPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[D_" << s << "]*";
    if (p.terms().size() == 1) {
      os << p.str();
    } else {
      os << "(" << p.str() << ")";
    }
  }
  return os.str();
}

void DeterminantalCase::check() const {
  switch (family) {
    case MatrixFamily::Generic:
      if (n < 1 || m < n) throw InputError("generic case needs m >= n >= 1");
      if (p < 0 || p >= n) throw InputError("generic case needs 0 <= p < n");
      return;
    case MatrixFamily::OddSkew:
      if (n < 3 || n % 2 == 0) throw InputError("odd-skew case needs odd n >= 3");
      if (p < 0 || p >= half()) throw InputError("skew case needs 0 <= p < floor(n/2)");
      return;
    case MatrixFamily::EvenSkew:
      if (n < 2 || n % 2 != 0) throw InputError("even-skew case needs even n >= 2");
      if (p < 0 || p >= half()) throw InputError("skew case needs 0 <= p < n/2");
      return;
    case MatrixFamily::Symmetric:
      if (n < 1) throw InputError("symmetric case needs n >= 1");
      if (p < 0 || p >= n) throw InputError("symmetric case needs 0 <= p < n");
      return;
  }
  throw InputError("bad family");
}

void DeterminantalCase::check_for_corollaries() const {
  check();
  if (family == MatrixFamily::Symmetric) {
    if (p < 2)
      throw InputError("symmetric stratification invariants need p >= 2");
  } else if (p < 1) {
    throw InputError("stratification invariants need p >= 1");
  }
}

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

GrothendieckClassPoly local_cohomology_poly(const DeterminantalCase& c) {
  c.check();
  GrothendieckClassPoly out;
  switch (c.family) {
    case MatrixFamily::Generic: {
      for (int s = 0; s <= c.p; ++s) {
        int base = (c.n - c.p) * (c.n - c.p) + (c.n - s) * (c.m - c.n);
        QPolynomial term = QPolynomial::monomial(base) *
                           q_binomial(c.n - s - 1, c.p - s).substitute_power(2);
        out.add(s, term);
      }
      break;
    }
    case MatrixFamily::OddSkew: {
      int mm = c.half();
      for (int s = 0; s <= c.p; ++s) {
        int base = 2 * (mm - c.p) * (mm - c.p) + (mm - c.p) + 2 * (c.p - s);
        QPolynomial term = QPolynomial::monomial(base) *
                           q_binomial(mm - 1 - s, c.p - s).substitute_power(4);
        out.add(s, term);
      }
      break;
    }
    case MatrixFamily::EvenSkew: {
      int mm = c.half();
      for (int s = 0; s <= c.p; ++s) {
        int base = 2 * (mm - c.p) * (mm - c.p) - (mm - c.p);
        QPolynomial term = QPolynomial::monomial(base) *
                           q_binomial(mm - 1 - s, c.p - s).substitute_power(4);
        out.add(s, term);
      }
      break;
    }
    case MatrixFamily::Symmetric: {
      for (int l = 0; l <= c.p / 2; ++l) {
        int base = 1 + static_cast<int>(choose2(c.n - c.p + 2 * l + 1)) -
                   static_cast<int>(choose2(2 * l + 2));
        QPolynomial term =
            QPolynomial::monomial(base) *
            q_binomial((c.n - c.p + 2 * l - 1) / 2, l).substitute_power(-4);
        if (!term.zero() && term.min_exp() < 0)
          throw ValidationError("negative exponent in symmetric case output");
        out.add(c.p - 2 * l, term);
      }
      break;
    }
  }
  if (!out.nonnegative())
    throw ValidationError("negative coefficient in local cohomology classes");
  return out;
}

int stratum_codim(const DeterminantalCase& c) {
  switch (c.family) {
    case MatrixFamily::Generic:
      return (c.m - c.p) * (c.n - c.p);
    case MatrixFamily::OddSkew:
    case MatrixFamily::EvenSkew:
      return static_cast<int>(choose2(c.n - 2 * c.p));
    case MatrixFamily::Symmetric:
      return static_cast<int>(choose2(c.n - c.p + 1));
  }
  throw InputError("bad family");
}

CodimLcdef codim_and_lcdef(const DeterminantalCase& c) {
  auto poly = local_cohomology_poly(c);
  CodimLcdef out;
  out.codim = poly.min_exp();
  if (out.codim != stratum_codim(c))
    throw ValidationError("minimum degree does not match codimension");
  out.lcdef = poly.max_exp() - out.codim;
  return out;
}

int lcdef_gen_pos(const DeterminantalCase& c) {
  c.check_for_corollaries();
  switch (c.family) {
    case MatrixFamily::Generic:
      return c.m + c.n - 2 * c.p - 2;
    case MatrixFamily::OddSkew:
      return 4 * (c.half() - c.p - 1) + 2;
    case MatrixFamily::EvenSkew:
      return 4 * (c.half() - c.p - 1);
    case MatrixFamily::Symmetric:
      return 2 * (c.n - c.p - 1);
  }
  throw InputError("bad family");
}

NcciLocus ncci_locus(const DeterminantalCase& c) {
  c.check_for_corollaries();
  NcciLocus out;
  switch (c.family) {
    case MatrixFamily::Generic:
      if (c.m == c.n && c.n == c.p + 1) return out;
      out.empty = false;
      out.stratum = c.p - 1;
      return out;
    case MatrixFamily::OddSkew:
      out.empty = false;
      out.stratum = c.p - 1;
      return out;
    case MatrixFamily::EvenSkew:
      if (c.half() == c.p + 1) return out;
      out.empty = false;
      out.stratum = c.p - 1;
      return out;
    case MatrixFamily::Symmetric:
      if (c.n == c.p + 1) return out;
      out.empty = false;
      out.stratum = c.p - 2;
      return out;
  }
  throw InputError("bad family");
}

std::vector<ExtendedLevel> c_value_range(const DeterminantalCase& c) {
  c.check_for_corollaries();
  auto zero = ExtendedLevel::finite(0);
  auto one = ExtendedLevel::finite(1);
  switch (c.family) {
    case MatrixFamily::Generic:
      if (c.m == c.n && c.n == c.p + 1) return {ExtendedLevel::inf()};
      return {zero};
    case MatrixFamily::OddSkew:
      return {zero, one};
    case MatrixFamily::EvenSkew:
      if (c.half() == c.p + 1) return {ExtendedLevel::inf()};
      return {zero, one};
    case MatrixFamily::Symmetric:
      if (c.n == c.p + 1) return {ExtendedLevel::inf()};
      return {zero, one};
  }
  throw InputError("bad family");
}

}  // namespace hodgecone
