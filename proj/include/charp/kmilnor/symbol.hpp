#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charp/derham/forms.hpp"
#include "charp/derham/text.hpp"

namespace charp {

/// {x_1, ..., x_r} with nonzero entries
class MilnorSymbol {
 public:
  MilnorSymbol(RatFieldPtr K, std::vector<RatFn> entries) : K_(std::move(K)), entries_(std::move(entries)) {
    for (const auto& x : entries_) {
      if (x.is_zero()) throw ZeroEntry("symbol entry is 0");
      if (!(*x.field() == *K_)) throw InvalidArgument("symbol entry from another field");
    }
  }

  const RatFieldPtr& field() const { return K_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  const std::vector<RatFn>& entries() const { return entries_; }

 private:
  RatFieldPtr K_;
  std::vector<RatFn> entries_;
};

inline DiffForm symbol_dlog_class(const MilnorSymbol& s) { return dlog(s.field(), s.entries()); }

/// integer combination of symbols of one degree
class SymbolSum {
 public:
  SymbolSum(RatFieldPtr K, int degree) : K_(std::move(K)), degree_(degree) {}
  explicit SymbolSum(const MilnorSymbol& s) : K_(s.field()), degree_(s.degree()) { add(1, s); }

  const RatFieldPtr& field() const { return K_; }
  int degree() const { return degree_; }
  const std::vector<std::pair<long long, MilnorSymbol>>& terms() const { return terms_; }

  void add(long long n, const MilnorSymbol& s) {
    if (s.degree() != degree_) throw DegreeMismatch("symbol of degree " + std::to_string(s.degree()) +
                                                    " added to a sum of degree " + std::to_string(degree_));
    if (n != 0) terms_.emplace_back(n, s);
  }
  void add(long long n, const SymbolSum& b) {
    if (b.degree_ != degree_) throw DegreeMismatch("adding symbol sums of different degree");
    for (const auto& [m, s] : b.terms_) add(n * m, s);
  }

  friend SymbolSum operator+(SymbolSum a, const SymbolSum& b) {
    a.add(1, b);
    return a;
  }
  friend SymbolSum operator-(SymbolSum a, const SymbolSum& b) {
    a.add(-1, b);
    return a;
  }

 private:
  RatFieldPtr K_;
  int degree_;
  std::vector<std::pair<long long, MilnorSymbol>> terms_;
};

inline DiffForm symbol_dlog_class(const SymbolSum& s) {
  const auto& K = s.field();
  DiffForm out(K, s.degree());
  const auto p = static_cast<long long>(K->p());
  for (const auto& [n, sym] : s.terms()) {
    long long m = ((n % p) + p) % p;
    if (m == 0) continue;
    out += symbol_dlog_class(sym).scaled(RatFn::from_int(K, m));
  }
  return out;
}

/// equality in K_r^M / p, decided on dlog images
inline bool equal_mod_p(const SymbolSum& a, const SymbolSum& b) {
  if (a.degree() != b.degree()) return false;
  return symbol_dlog_class(a) == symbol_dlog_class(b);
}

inline std::string symbol_text(const MilnorSymbol& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries().size(); ++i) out += (i ? ", " : "") + to_text(s.entries()[i]);
  return out + "}";
}

/// "2*{t, u} - {u, t}"; "0" when empty
inline std::string symbol_sum_text(const SymbolSum& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& [n, sym] : s.terms()) {
    long long a = n < 0 ? -n : n;
    if (out.empty())
      out += n < 0 ? "-" : "";
    else
      out += n < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += symbol_text(sym);
  }
  return out;
}

}  // namespace charp
