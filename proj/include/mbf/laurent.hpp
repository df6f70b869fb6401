#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace mbf {

// Laurent polynomial in one variable A with 64-bit integer coefficients.
// Coefficients are exact; the Kauffman bracket of a <=16 crossing diagram
// stays far below the overflow range.
class Laurent {
 public:
  Laurent() = default;
  static Laurent mono(int exp, long long coeff = 1) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, v] : o.c_) {
      auto it = c_.find(e);
      if (it == c_.end()) {
        c_.emplace(e, v);
      } else if ((it->second += v) == 0) {
        c_.erase(it);
      }
    }
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, va] : a.c_)
      for (auto& [eb, vb] : b.c_) {
        auto it = r.c_.find(ea + eb);
        if (it == r.c_.end()) {
          if (va * vb != 0) r.c_.emplace(ea + eb, va * vb);
        } else if ((it->second += va * vb) == 0) {
          r.c_.erase(it);
        }
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // A -> A^-1
  Laurent mirrored() const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[-e] = v;
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    return a.c_ < b.c_;
  }

  // "e:c,e:c,..." ascending by exponent; "0" for the zero polynomial.
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
      if (!first) os << ',';
      first = false;
      os << e << ':' << v;
    }
    return os.str();
  }

  const std::map<int, long long>& coeffs() const { return c_; }

 private:
  std::map<int, long long> c_;
};

}  // namespace mbf
