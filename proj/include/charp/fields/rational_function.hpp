#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "charp/fields/polynomial.hpp"

namespace charp {

/// F_q(t_1, ..., t_d) with named variables; the variables are the p-basis.
class RatField {
 public:
  static std::shared_ptr<const RatField> make(FieldPtr F, std::vector<std::string> names) {
    for (const auto& n : names)
      if (n.empty() || (F->e() > 1 && n == "z"))
        throw InvalidArgument("bad variable name '" + n + "'");
    return std::shared_ptr<const RatField>(new RatField(std::move(F), std::move(names)));
  }

  /// F_q(t) for d = 1, F_q(t1,...,td) otherwise
  static std::shared_ptr<const RatField> standard(std::uint32_t q, int d) {
    std::vector<std::string> names;
    if (d == 1) {
      names.push_back("t");
    } else {
      for (int i = 1; i <= d; ++i) names.push_back("t" + std::to_string(i));
    }
    return make(GaloisField::make(q), std::move(names));
  }

  const PolyRing& ring() const { return ring_; }
  const GaloisField& gf() const { return ring_.field(); }
  const FieldPtr& gf_ptr() const { return ring_.field_ptr(); }
  int d() const { return ring_.nvars(); }
  std::uint32_t p() const { return gf().p(); }
  std::uint32_t q() const { return gf().q(); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::string descriptor() const {
    std::string s = gf().descriptor();
    if (!names_.empty()) {
      s += "(";
      for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
      s += ")";
    }
    return s;
  }

  friend bool operator==(const RatField& a, const RatField& b) {
    return a.q() == b.q() && a.gf().modulus() == b.gf().modulus() && a.names_ == b.names_;
  }

 private:
  RatField(FieldPtr F, std::vector<std::string> names)
      : ring_(std::move(F), static_cast<int>(names.size())), names_(std::move(names)) {}

  PolyRing ring_;
  std::vector<std::string> names_;
};

using RatFieldPtr = std::shared_ptr<const RatField>;

/// Element of F_q(t_1..t_d) in canonical form: gcd(num, den) = 1, den monic
/// in grlex, zero has den = 1.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(RatFieldPtr K) : K_(std::move(K)), den_(K_->ring().one()) {}
  RatFn(RatFieldPtr K, Poly num) : K_(std::move(K)), num_(std::move(num)), den_(K_->ring().one()) {}
  RatFn(RatFieldPtr K, Poly num, Poly den) : K_(std::move(K)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RatFn constant(const RatFieldPtr& K, GaloisField::Code c) { return RatFn(K, K->ring().constant(c)); }
  static RatFn from_int(const RatFieldPtr& K, std::int64_t n) { return constant(K, K->gf().from_int(n)); }
  static RatFn var(const RatFieldPtr& K, int i) { return RatFn(K, K->ring().var(i)); }
  static RatFn monomial(const RatFieldPtr& K, const Monomial& m, GaloisField::Code c = 1) {
    return RatFn(K, K->ring().monomial(m, c));
  }

  const RatFieldPtr& field() const { return K_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_is_one() && num_.is_constant() && !num_.is_zero() && num_.lead().c == 1; }
  bool is_constant() const { return den_is_one() && num_.is_constant(); }
  bool is_polynomial() const { return den_is_one(); }
  GaloisField::Code constant_value() const { return num_.is_zero() ? 0 : num_.lead().c; }

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) { return a.add_sub(b, false); }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a.add_sub(b, true); }

  RatFn operator-() const {
    RatFn r = *this;
    r.num_ = K_->ring().neg(num_);
    return r;
  }

  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    const auto& R = a.K_->ring();
    if (a.is_zero() || b.is_zero()) return RatFn(a.K_);
    if (a.den_is_one() && b.den_is_one()) return RatFn(a.K_, R.mul(a.num_, b.num_), R.one(), Canonical{});
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    Poly g1 = R.gcd(a.num_, b.den_), g2 = R.gcd(b.num_, a.den_);
    Poly n = R.mul(R.divide(a.num_, g1), R.divide(b.num_, g2));
    Poly d = R.mul(R.divide(a.den_, g2), R.divide(b.den_, g1));
    return RatFn(a.K_, std::move(n), std::move(d), Monic{});
  }

  RatFn inv() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in " + K_->descriptor());
    return RatFn(K_, den_, num_, Monic{});
  }

  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }

  RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
  RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
  RatFn& operator*=(const RatFn& b) { return *this = *this * b; }

  RatFn scaled(GaloisField::Code c) const {
    if (c == 0) return RatFn(K_);
    RatFn r = *this;
    r.num_ = K_->ring().scale(num_, c);
    return r;
  }

  RatFn pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    const auto& R = K_->ring();
    return RatFn(K_, R.pow(num_, k), R.pow(den_, k), Canonical{});
  }

  RatFn frobenius() const {
    const auto& R = K_->ring();
    return RatFn(K_, R.frobenius(num_), R.frobenius(den_), Canonical{});
  }

  /// partial derivative in t_v
  RatFn derivative(int v) const {
    const auto& R = K_->ring();
    Poly n = R.sub(R.mul(R.derivative(num_, v), den_), R.mul(num_, R.derivative(den_, v)));
    return RatFn(K_, std::move(n), R.mul(den_, den_));
  }

  /// t_v * d/dt_v
  RatFn log_derivative(int v) const {
    const auto& R = K_->ring();
    if (den_is_one()) return RatFn(K_, R.log_derivative_numer(num_, v), R.one(), Canonical{});
    Poly n = R.sub(R.mul(R.log_derivative_numer(num_, v), den_), R.mul(num_, R.log_derivative_numer(den_, v)));
    return RatFn(K_, std::move(n), R.mul(den_, den_));
  }

  /// t_v-adic valuation; zero maps to a large sentinel
  std::int64_t valuation(int v) const {
    if (is_zero()) return kInfiniteValuation;
    const auto& R = K_->ring();
    return static_cast<std::int64_t>(R.order_in(num_, v)) - R.order_in(den_, v);
  }

  static constexpr std::int64_t kInfiniteValuation = (std::int64_t{1} << 40);

  struct Canonical {};
  struct Monic {};
  /// trusts that (num, den) is already canonical
  RatFn(RatFieldPtr K, Poly num, Poly den, Canonical) : K_(std::move(K)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = K_->ring().one();
  }
  /// coprime but den not necessarily monic
  RatFn(RatFieldPtr K, Poly num, Poly den, Monic) : K_(std::move(K)), num_(std::move(num)), den_(std::move(den)) {
    make_monic();
  }

 private:
  bool den_is_one() const { return den_.terms.size() == 1 && den_.terms[0].m.deg == 0 && den_.terms[0].c == 1; }

  void make_monic() {
    const auto& R = K_->ring();
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = R.one();
      return;
    }
    GaloisField::Code lc = den_.lead().c;
    if (lc != 1) {
      GaloisField::Code il = K_->gf().inv(lc);
      num_ = R.scale(num_, il);
      den_ = R.scale(den_, il);
    }
  }

  void canonicalize() {
    const auto& R = K_->ring();
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = R.one();
      return;
    }
    if (!den_.is_constant()) {
      Poly g = R.gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = R.divide(num_, g);
        den_ = R.divide(den_, g);
      }
    }
    make_monic();
  }

  RatFn add_sub(const RatFn& b, bool negate) const {
    const auto& R = K_->ring();
    const Poly& bn = b.num_;
    if (b.is_zero()) return *this;
    if (is_zero()) return negate ? -b : b;
    if (den_is_one() && b.den_is_one()) {
      return RatFn(K_, negate ? R.sub(num_, bn) : R.add(num_, bn), R.one(), Canonical{});
    }
    if (den_ == b.den_) {
      Poly n = negate ? R.sub(num_, bn) : R.add(num_, bn);
      return RatFn(K_, std::move(n), den_);
    }
    if (b.den_is_one()) {
      Poly n = R.mul(bn, den_);
      return RatFn(K_, negate ? R.sub(num_, n) : R.add(num_, n), den_, Canonical{});
    }
    if (den_is_one()) {
      Poly n = R.mul(num_, b.den_);
      return RatFn(K_, negate ? R.sub(n, bn) : R.add(n, bn), b.den_, Canonical{});
    }
    Poly g = R.gcd(den_, b.den_);
    Poly da = R.divide(den_, g), db = R.divide(b.den_, g);
    Poly x = R.mul(num_, db), y = R.mul(bn, da);
    Poly n = negate ? R.sub(x, y) : R.add(x, y);
    Poly d = R.mul(da, b.den_);
    if (!g.is_constant() && !n.is_zero()) {
      Poly h = R.gcd(n, g);
      if (!h.is_constant()) {
        n = R.divide(n, h);
        d = R.divide(d, h);
      }
    }
    return RatFn(K_, std::move(n), std::move(d), Monic{});
  }

  RatFieldPtr K_;
  Poly num_;
  Poly den_;
};

}  // namespace charp
