#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "charp/error.hpp"

namespace charp {

/// F_q = F_p[z]/(m(z)). Elements are coded as integers in [0, q): the base-p
/// digits are the coefficients of 1, z, z^2, ...
class GaloisField {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Field of order q with the built-in modulus (or the first monic
  /// irreducible found for orders outside the table).
  static std::shared_ptr<const GaloisField> make(std::uint32_t q) {
    auto [p, e] = split_prime_power(q);
    return std::shared_ptr<const GaloisField>(new GaloisField(p, default_modulus(p, e)));
  }

  /// modulus given low degree first, monic.
  static std::shared_ptr<const GaloisField> make(std::uint32_t p,
                                                 std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(modulus)));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return e_ == 1; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// class of z; only meaningful when e > 1
  Code z() const { return e_ > 1 ? p_ : 1; }

  Code from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }

  Code add(Code a, Code b) const {
    if (e_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    Code out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      Code s = (a % p_ + b % p_) % p_;
      out += s * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  Code neg(Code a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Code out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      Code dgt = a % p_;
      out += ((p_ - dgt) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % p_);
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  Code inv(Code a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
    if (q_ == 2) return 1;
    if (e_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, std::int64_t n) const {
    if (n < 0) return pow(inv(a), -n);
    if (a == 0) return n == 0 ? 1 : 0;
    std::uint64_t m = static_cast<std::uint64_t>(n) % (q_ - 1);
    if (e_ == 1) {
      std::uint64_t r = 1, b = a;
      while (m) {
        if (m & 1) r = r * b % p_;
        b = b * b % p_;
        m >>= 1;
      }
      return static_cast<Code>(r);
    }
    return exp_[(static_cast<std::uint64_t>(log_[a]) * m) % (q_ - 1)];
  }

  Code frobenius(Code a) const { return pow(a, p_); }

  /// unique b with b^p = a (F_q is perfect)
  Code pth_root(Code a) const { return e_ == 1 ? a : pow(a, q_ / p_); }

  /// Tr_{F_q/F_p}, returned as a code in [0, p)
  Code trace(Code a) const {
    Code s = 0, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      s = add(s, x);
      x = frobenius(x);
    }
    return s;
  }

  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> out(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  Code from_digits(const std::vector<std::uint32_t>& d) const {
    Code out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_ && i < d.size(); ++i) {
      out += (d[i] % p_) * place;
      place *= p_;
    }
    return out;
  }

  std::string descriptor() const { return "GF(" + std::to_string(q_) + ")"; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q) {
    if (q < 2 || q > kMaxOrder) throw InvalidArgument("field order " + std::to_string(q) + " out of range");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return {p, e};
  }

  /// trial division by every monic polynomial of degree <= deg/2
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& f) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return n == 1;
    for (std::size_t k = 1; k <= n / 2; ++k) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < k; ++i) count *= p;
      for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<std::uint32_t> g(k + 1);
        std::uint64_t x = c;
        for (std::size_t i = 0; i < k; ++i) {
          g[i] = static_cast<std::uint32_t>(x % p);
          x /= p;
        }
        g[k] = 1;
        if (poly_mod_is_zero(p, f, g)) return false;
      }
    }
    return true;
  }

 private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw InvalidArgument("modulus must be monic");
    e_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q *= p_;
    if (q > kMaxOrder) throw InvalidArgument("field too large");
    q_ = static_cast<std::uint32_t>(q);
    if (!is_irreducible(p_, modulus_)) throw InvalidArgument("modulus is reducible over F_" + std::to_string(p_));
    if (e_ > 1) build_tables();
  }

  static bool poly_mod_is_zero(std::uint32_t p, std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g) {
    const std::size_t k = g.size() - 1;
    for (std::size_t i = f.size(); i-- > k;) {
      std::uint32_t c = f[i] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= k; ++j)
        f[i - k + j] = (f[i - k + j] + p - (c * g[j]) % p) % p;
    }
    for (std::size_t i = 0; i < k && i < f.size(); ++i)
      if (f[i] % p != 0) return false;
    return true;
  }

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return {0, 1};
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},       {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}}, {9, {2, 2, 1}},
        {27, {1, 2, 0, 1}},      {25, {2, 4, 1}},         {49, {3, 6, 1}},
    };
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    if (auto it = table.find(q); it != table.end()) return it->second;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> f(e + 1);
      std::uint64_t x = c;
      for (std::uint32_t i = 0; i < e; ++i) {
        f[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      f[e] = 1;
      if (is_irreducible(p, f)) return f;
    }
    throw InvalidArgument("no irreducible polynomial found");
  }

  Code slow_mul(Code a, Code b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    for (std::size_t i = prod.size(); i-- > e_;) {
      std::uint64_t c = prod[i] % p_;
      if (c == 0) continue;
      for (std::uint32_t j = 0; j <= e_; ++j)
        prod[i - e_ + j] = (prod[i - e_ + j] + p_ * p_ - (c * modulus_[j]) % p_) % p_;
    }
    std::vector<std::uint32_t> r(e_);
    for (std::uint32_t i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(r);
  }

  void build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (Code g = 2; g < q_; ++g) {
      Code x = 1;
      std::uint32_t order = 0;
      do {
        x = slow_mul(x, g);
        ++order;
      } while (x != 1 && order < q_);
      if (order != q_ - 1) continue;
      x = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, g);
      }
      return;
    }
    throw InvalidArgument("no primitive element");
  }

  std::uint32_t p_ = 2, e_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// value type for elements of F_q
struct Fq {
  FieldPtr field;
  GaloisField::Code v = 0;

  Fq() = default;
  Fq(FieldPtr f, GaloisField::Code code) : field(std::move(f)), v(code) {}

  bool is_zero() const { return v == 0; }
  friend Fq operator+(const Fq& a, const Fq& b) { return {a.field, a.field->add(a.v, b.v)}; }
  friend Fq operator-(const Fq& a, const Fq& b) { return {a.field, a.field->sub(a.v, b.v)}; }
  friend Fq operator*(const Fq& a, const Fq& b) { return {a.field, a.field->mul(a.v, b.v)}; }
  friend Fq operator/(const Fq& a, const Fq& b) { return {a.field, a.field->div(a.v, b.v)}; }
  Fq operator-() const { return {field, field->neg(v)}; }
  Fq inv() const { return {field, field->inv(v)}; }
  Fq pow(std::int64_t n) const { return {field, field->pow(v, n)}; }
  friend bool operator==(const Fq& a, const Fq& b) { return a.v == b.v; }
};

struct ArtinSchreier {
  GaloisField::Code trace = 0;
  std::optional<GaloisField::Code> solution;
};

/// trace of x and, when it vanishes, the smallest a with a^p - a = x
inline ArtinSchreier artin_schreier(const GaloisField& F, GaloisField::Code x) {
  ArtinSchreier out;
  out.trace = F.trace(x);
  for (GaloisField::Code a = 0; a < F.q(); ++a) {
    if (F.sub(F.frobenius(a), a) == x) {
      out.solution = a;
      break;
    }
  }
  return out;
}

}  // namespace charp
