#pragma once

#include <numeric>
#include <string>

#include "charp/finab/snf.hpp"

namespace charp {

/// a/b in Q/Z, reduced, 0 <= a < b (zero is 0/1)
class QZ {
 public:
  QZ() = default;
  QZ(long long a, long long b) {
    if (b == 0) throw DivisionByZero("Q/Z denominator 0");
    if (b < 0) {
      a = -a;
      b = -b;
    }
    a = floor_mod(a, b);
    long long g = std::gcd(a, b);
    a_ = a / g;
    b_ = b / g;
  }

  long long num() const { return a_; }
  long long den() const { return b_; }
  bool is_zero() const { return a_ == 0; }

  friend QZ operator+(const QZ& x, const QZ& y) {
    long long l = std::lcm(x.b_, y.b_);
    return QZ(x.a_ * (l / x.b_) + y.a_ * (l / y.b_), l);
  }
  friend QZ operator-(const QZ& x, const QZ& y) { return x + (-y); }
  QZ operator-() const { return QZ(-a_, b_); }
  friend QZ operator*(long long n, const QZ& x) { return QZ(floor_mod(n, x.b_) * x.a_, x.b_); }
  QZ& operator+=(const QZ& y) { return *this = *this + y; }

  friend bool operator==(const QZ& x, const QZ& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QZ& x, const QZ& y) { return !(x == y); }

  /// x * n as an integer; requires den | n
  long long times(long long n) const {
    if (n % b_ != 0) throw InvalidArgument("Q/Z value " + text() + " is not killed by " + std::to_string(n));
    return a_ * (n / b_);
  }

  std::string text() const { return a_ == 0 ? "0" : std::to_string(a_) + "/" + std::to_string(b_); }

  /// "a/b" or "0" or an integer
  static QZ parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return QZ(std::stoll(s), 1);
      return QZ(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad Q/Z value '" + s + "'");
    }
  }

 private:
  long long a_ = 0, b_ = 1;
};

}  // namespace charp
