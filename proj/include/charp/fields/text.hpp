#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "charp/fields/rational_function.hpp"

namespace charp {

// ---- emission ----

inline std::string coeff_text(const GaloisField& F, GaloisField::Code c) {
  if (F.e() == 1) return std::to_string(c);
  auto dg = F.digits(c);
  std::string s;
  for (std::size_t i = dg.size(); i-- > 0;) {
    if (dg[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (mono.empty())
      s += std::to_string(dg[i]);
    else if (dg[i] == 1)
      s += mono;
    else
      s += std::to_string(dg[i]) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

inline std::string poly_text(const RatField& K, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms) {
    std::string mono;
    for (int i = 0; i < K.d(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += K.names()[static_cast<std::size_t>(i)];
      if (t.m.e[i] != 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    std::string cs = coeff_text(K.gf(), t.c);
    if (!s.empty()) s += "+";
    if (mono.empty()) {
      s += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
    } else if (t.c == 1) {
      s += mono;
    } else if (cs.find('+') != std::string::npos) {
      s += "(" + cs + ")*" + mono;
    } else {
      s += cs + "*" + mono;
    }
  }
  return s;
}

inline std::string to_text(const RatFn& f) {
  const auto& K = *f.field();
  std::string n = poly_text(K, f.num());
  if (f.is_polynomial()) return n;
  std::string d = poly_text(K, f.den());
  if (n.find('+') != std::string::npos) n = "(" + n + ")";
  if (d.find_first_of("+*") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

// ---- parsing ----

namespace detail {

class ElementParser {
 public:
  ElementParser(const RatFieldPtr& K, std::string_view s) : K_(K), s_(s) {}

  RatFn parse() {
    RatFn v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFn expr() {
    RatFn v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFn term() {
    RatFn v = unary();
    for (;;) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = v / unary();
      else
        return v;
    }
  }

  RatFn unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFn power() {
    RatFn b = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      long long k = integer();
      return b.pow(neg ? -k : k);
    }
    return b;
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 15) fail("integer too long");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  RatFn primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFn v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFn::from_int(K_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = K_->index_of(name);
      if (idx >= 0) return RatFn::var(K_, idx);
      if (name == "z" && K_->gf().e() > 1) return RatFn::constant(K_, K_->gf().z());
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const RatFieldPtr& K_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace detail

inline RatFn parse_element(const RatFieldPtr& K, std::string_view text) {
  return detail::ElementParser(K, text).parse();
}

/// "GF(q)" or "GF(q)(v1,...,vd)"
inline RatFieldPtr parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("GF(", 0) != 0) throw ParseError("field descriptor must start with GF(: '" + std::string(text) + "'");
  std::size_t close = s.find(')');
  if (close == std::string::npos) throw ParseError("unterminated GF(");
  std::string qs = s.substr(3, close - 3);
  if (qs.empty() || qs.size() > 6 || qs.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad field order '" + qs + "'");
  FieldPtr F;
  try {
    F = GaloisField::make(static_cast<std::uint32_t>(std::stoul(qs)));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  std::vector<std::string> names;
  std::string rest = s.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != '(' || rest.back() != ')') throw ParseError("bad variable list '" + rest + "'");
    std::string body = rest.substr(1, rest.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      std::string name = body.substr(start, comma - start);
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw ParseError("bad variable name '" + name + "'");
      for (const auto& prev : names)
        if (prev == name) throw ParseError("duplicate variable '" + name + "'");
      names.push_back(name);
      start = comma + 1;
    }
  }
  if (static_cast<int>(names.size()) > kMaxVars) throw ParseError("too many variables");
  try {
    return RatField::make(F, names);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace charp
