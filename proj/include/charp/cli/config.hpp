#pragma once
// Command configuration and its JSON form. Only fields that were set are emitted,
// in a fixed key order, so emit(parse(j)) == j for any emitted j.

#include <cstdint>
#include <optional>
#include <string>

#include "charp/io/serialize.hpp"

namespace charp::cli {

using io::Json;

struct Config {
  std::string command;
  std::optional<std::string> field;  // descriptor text, e.g. "GF(2)(u,t)"
  std::optional<int> p, d, r, q;
  std::optional<std::string> which, piece_case, suite;
  std::optional<std::string> entries, x, pi;  // symbol entries, unit, uniformizer as element text
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<std::string> out;
  std::string format = "json";

  friend bool operator==(const Config&, const Config&) = default;
};

namespace detail {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const Json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = io::need<T>(j, key);
}

}  // namespace detail

inline Json to_json(const Config& c) {
  Json j = {{"command", c.command}};
  detail::put(j, "field", c.field);
  detail::put(j, "p", c.p);
  detail::put(j, "d", c.d);
  detail::put(j, "r", c.r);
  detail::put(j, "q", c.q);
  detail::put(j, "which", c.which);
  detail::put(j, "case", c.piece_case);
  detail::put(j, "suite", c.suite);
  detail::put(j, "entries", c.entries);
  detail::put(j, "x", c.x);
  detail::put(j, "pi", c.pi);
  detail::put(j, "seed", c.seed);
  detail::put(j, "samples", c.samples);
  detail::put(j, "out", c.out);
  j["format"] = c.format;
  return j;
}

inline Config config_from_json(const Json& j) {
  static const char* known[] = {"command", "field", "p",  "d",    "r",       "q",   "which",  "case",
                                "suite",   "entries", "x", "pi", "seed", "samples", "out", "format"};
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* n : known) ok = ok || k == n;
    if (!ok) throw ParseError("unknown config key '" + k + "'");
  }
  Config c;
  c.command = io::need<std::string>(j, "command");
  detail::get(j, "field", c.field);
  detail::get(j, "p", c.p);
  detail::get(j, "d", c.d);
  detail::get(j, "r", c.r);
  detail::get(j, "q", c.q);
  detail::get(j, "which", c.which);
  detail::get(j, "case", c.piece_case);
  detail::get(j, "suite", c.suite);
  detail::get(j, "entries", c.entries);
  detail::get(j, "x", c.x);
  detail::get(j, "pi", c.pi);
  detail::get(j, "seed", c.seed);
  detail::get(j, "samples", c.samples);
  detail::get(j, "out", c.out);
  if (j.contains("format")) c.format = io::need<std::string>(j, "format");
  if (c.format != "json" && c.format != "table") throw ParseError("format must be json or table");
  return c;
}

}  // namespace charp::cli
