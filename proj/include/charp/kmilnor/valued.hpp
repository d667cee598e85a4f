#pragma once

#include <utility>

#include "charp/fields/rational_function.hpp"

namespace charp {

/// K = k(t) with t the last variable of K, the t-adic valuation, and the
/// residue field k on the remaining variables
class ValuedField {
 public:
  explicit ValuedField(RatFieldPtr K) : K_(std::move(K)) {
    if (K_->d() < 1) throw InvalidArgument("valued field needs at least one variable");
    std::vector<std::string> names(K_->names().begin(), K_->names().end() - 1);
    k_ = RatField::make(K_->gf_ptr(), std::move(names));
  }

  const RatFieldPtr& field() const { return K_; }
  const RatFieldPtr& residue_field() const { return k_; }
  int var() const { return K_->d() - 1; }

  RatFn uniformizer() const { return RatFn::var(K_, var()); }
  std::int64_t valuation(const RatFn& x) const { return x.valuation(var()); }

  /// x / t^{v(x)}
  RatFn unit_part(const RatFn& x) const {
    if (x.is_zero()) throw ZeroEntry("unit part of 0");
    return x * uniformizer().pow(-valuation(x));
  }

  /// class in k of an element of valuation >= 0
  RatFn residue(const RatFn& x) const {
    const std::int64_t v = valuation(x);
    if (v < 0) throw InvalidArgument("residue of an element with a pole at t = 0");
    if (v > 0) return RatFn(k_);
    const auto& R = K_->ring();
    return RatFn(k_, drop(R.at_zero(x.num(), var())), drop(R.at_zero(x.den(), var())));
  }

  /// k -> K
  RatFn lift(const RatFn& a) const {
    return RatFn(K_, move_terms(a.num(), K_->ring()), move_terms(a.den(), K_->ring()), RatFn::Canonical{});
  }

 private:
  Poly drop(const Poly& a) const { return move_terms(a, k_->ring()); }

  static Poly move_terms(const Poly& a, const PolyRing& to) {
    std::vector<Term> raw = a.terms;
    return to.collect(std::move(raw));
  }

  RatFieldPtr K_;
  RatFieldPtr k_;
};

}  // namespace charp
