#pragma once

#include <compare>
#include <string>

#include "hodgecone/errors.hpp"

namespace hodgecone {

// A level in the totally ordered set {neg} < 0 < 1 < ... < {inf}.
// "neg" collapses every negative value into a single bottom element.
class ExtendedLevel {
public:
  static ExtendedLevel neg() { return ExtendedLevel(Kind::Neg, 0); }
  static ExtendedLevel inf() { return ExtendedLevel(Kind::Inf, 0); }
  static ExtendedLevel finite(int v) {
    if (v < 0) return neg();
    return ExtendedLevel(Kind::Finite, v);
  }

  bool is_neg() const { return kind_ == Kind::Neg; }
  bool is_inf() const { return kind_ == Kind::Inf; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  int value() const {
    if (!is_finite()) throw InputError("extended level has no finite value");
    return value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedLevel& a,
                                          const ExtendedLevel& b) {
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra <=> rb;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const ExtendedLevel& a, const ExtendedLevel& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string str() const {
    if (is_neg()) return "neg";
    if (is_inf()) return "inf";
    return std::to_string(value_);
  }

  // Parses "neg", "inf", or a nonnegative integer.
  static ExtendedLevel parse(const std::string& s) {
    if (s == "neg") return neg();
    if (s == "inf") return inf();
    try {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size() || v < 0) throw InputError("bad level: " + s);
      return finite(v);
    } catch (const std::exception&) {
      throw InputError("bad level: " + s);
    }
  }

private:
  enum class Kind { Neg, Finite, Inf };
  ExtendedLevel(Kind k, int v) : kind_(k), value_(v) {}
  int rank() const {
    if (kind_ == Kind::Neg) return 0;
    if (kind_ == Kind::Finite) return 1;
    return 2;
  }
  Kind kind_;
  int value_;
};

inline ExtendedLevel min(const ExtendedLevel& a, const ExtendedLevel& b) {
  return a < b ? a : b;
}

}  // namespace hodgecone
