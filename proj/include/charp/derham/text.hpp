#pragma once

#include <string>

#include "charp/derham/complex.hpp"
#include "charp/fields/text.hpp"

namespace charp {

/// "dlog(t1,t2)" for dt_1/t_1 ^ dt_2/t_2; empty for the empty subset
inline std::string dlog_text(const RatField& K, Subset I) {
  if (I == 0) return "";
  std::string s = "dlog(";
  bool first = true;
  for (int i : subset_indices(I)) {
    s += (first ? "" : ",") + K.names()[static_cast<std::size_t>(i)];
    first = false;
  }
  return s + ")";
}

inline std::string form_text(const DiffForm& w) {
  if (w.is_zero()) return "0";
  const auto& K = *w.field();
  std::string s;
  for (const auto& [I, a] : w.terms()) {
    std::string c = to_text(a);
    std::string b = dlog_text(K, I);
    if (!s.empty()) s += " + ";
    if (b.empty()) {
      s += c.find('+') != std::string::npos ? "(" + c + ")" : c;
    } else if (a.is_one()) {
      s += b;
    } else {
      s += (c.find_first_of("+/") != std::string::npos ? "(" + c + ")" : c) + "*" + b;
    }
  }
  return s;
}

/// label of the grid element t^m dt_I/t_I
inline std::string grid_label(const RatFieldPtr& K, const Grid& g, std::size_t pos) {
  return form_text(DiffForm::basis(RatFn::monomial(K, g.monomial(pos)), g.subset(pos)));
}

}  // namespace charp
