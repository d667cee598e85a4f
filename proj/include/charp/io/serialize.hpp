#pragma once
// JSON layouts for the data types. Keys keep insertion order.
//
//   form       {"field": "GF(2)(t)", "degree": r, "terms": [{"I": [0, 2], "coeff": "t^2+1"}]}
//   gram       {"which", "r", "target", "rows": [...], "cols": [...], "entries": [[text]]}
//   group      {"factors": [n_1, ..., n_k]}
//   hom        {"domain": group, "codomain": group, "matrix": [[int]]}   (columns = images of generators)
//   pairing    {"left": group, "right": group, "values": [["a/b"]]}
//   complex    {"lo": i, "degrees": [{"degree": i, "group": group, "d": [[int]]}]}
//   fingroup   {"identity": e, "table": [[int]]}
//   gmodule    {"group": fingroup, "module": group, "action": [[[int]]]}
//   symbol sum {"field": ..., "degree": r, "terms": [{"n": 2, "entries": [text]}]}

#include <string>
#include <vector>

#include <json.hpp>

#include "charp/complexes/complex.hpp"
#include "charp/derham/forms.hpp"
#include "charp/duality/gram.hpp"
#include "charp/fields/text.hpp"
#include "charp/finab/pairing.hpp"
#include "charp/gcoh/module.hpp"
#include "charp/kmilnor/symbol.hpp"

namespace charp::io {

using Json = nlohmann::ordered_json;

template <class T>
T need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

// forms

inline Json to_json(const DiffForm& w) {
  Json terms = Json::array();
  for (const auto& [I, c] : w.terms()) terms.push_back({{"I", subset_indices(I)}, {"coeff", to_text(c)}});
  return {{"field", w.field()->descriptor()}, {"degree", w.degree()}, {"terms", terms}};
}

inline DiffForm form_from_json(const Json& j) {
  auto K = parse_field(need<std::string>(j, "field"));
  DiffForm w(K, need<int>(j, "degree"));
  for (const auto& t : need<Json>(j, "terms")) {
    auto idx = need<std::vector<int>>(t, "I");
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] <= idx[i - 1]) throw ParseError("index list must be strictly increasing");
    for (int i : idx)
      if (i < 0 || i >= K->d()) throw ParseError("index " + std::to_string(i) + " out of range");
    w.add_term(subset_of(idx), parse_element(K, need<std::string>(t, "coeff")));
  }
  return w;
}

// Gram matrices (entries are the pairing values)

inline Json to_json(const GramMatrix& g) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols.size(); ++j) row.push_back(to_text(g.value(i, j)));
    entries.push_back(row);
  }
  return {{"which", gram_kind_name(g.which)}, {"r", g.r},          {"target", g.target},
          {"rows", g.rows},                   {"cols", g.cols},    {"entries", entries}};
}

// finite abelian groups

inline Json to_json(const FinAb& A) {
  Json f = Json::array();
  for (std::size_t i = 0; i < A.rank(); ++i) f.push_back(A.factor(i));
  return {{"factors", f}};
}

inline FinAb group_from_json(const Json& j) {
  try {
    return FinAb(need<std::vector<long long>>(j, "factors"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const FinHom& f) {
  return {{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"matrix", f.matrix().to_rows()}};
}

inline FinHom hom_from_json(const Json& j) {
  FinAb A = group_from_json(need<Json>(j, "domain")), B = group_from_json(need<Json>(j, "codomain"));
  auto rows = need<std::vector<std::vector<long long>>>(j, "matrix");
  if (rows.size() != B.rank()) throw ParseError("hom matrix needs one row per codomain factor");
  try {
    return FinHom(A, B, IntMat::from_rows(rows, A.rank()));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const FinPairing& phi) {
  Json v = Json::array();
  for (const auto& row : phi.values()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.text());
    v.push_back(r);
  }
  return {{"left", to_json(phi.left())}, {"right", to_json(phi.right())}, {"values", v}};
}

inline FinPairing pairing_from_json(const Json& j) {
  FinAb A = group_from_json(need<Json>(j, "left")), B = group_from_json(need<Json>(j, "right"));
  std::vector<std::vector<QZ>> v;
  for (const auto& row : need<std::vector<std::vector<std::string>>>(j, "values")) {
    v.emplace_back();
    for (const auto& s : row) v.back().push_back(QZ::parse(s));
  }
  try {
    return FinPairing(A, B, v);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// complexes

inline Json to_json(const FinComplex& M) {
  Json degs = Json::array();
  if (!M.empty())
    for (int i = M.lo(); i <= M.hi(); ++i) {
      Json e = {{"degree", i}, {"group", to_json(M.group(i))}};
      if (i < M.hi()) e["d"] = M.diff(i).matrix().to_rows();
      degs.push_back(e);
    }
  return {{"lo", M.empty() ? 0 : M.lo()}, {"degrees", degs}};
}

inline FinComplex complex_from_json(const Json& j) {
  const int lo = need<int>(j, "lo");
  std::vector<FinAb> groups;
  std::vector<std::vector<std::vector<long long>>> mats;
  const Json degs = need<Json>(j, "degrees");
  for (std::size_t k = 0; k < degs.size(); ++k) {
    if (need<int>(degs[k], "degree") != lo + static_cast<int>(k)) throw ParseError("degrees must be consecutive from lo");
    groups.push_back(group_from_json(need<Json>(degs[k], "group")));
    if (k + 1 < degs.size()) mats.push_back(need<std::vector<std::vector<long long>>>(degs[k], "d"));
  }
  std::vector<FinHom> diffs;
  try {
    for (std::size_t k = 0; k < mats.size(); ++k) {
      if (mats[k].size() != groups[k + 1].rank()) throw ParseError("differential has the wrong number of rows");
      diffs.emplace_back(groups[k], groups[k + 1], IntMat::from_rows(mats[k], groups[k].rank()));
    }
    return FinComplex(lo, groups, diffs);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// finite groups and modules

inline Json to_json(const FinGroup& G) { return {{"identity", G.identity()}, {"table", G.table()}}; }

inline FinGroup fingroup_from_json(const Json& j) {
  try {
    return FinGroup(need<std::vector<std::vector<int>>>(j, "table"), need<int>(j, "identity"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const GModule& M) {
  Json act = Json::array();
  for (int g = 0; g < M.group().order(); ++g) act.push_back(M.rho(g).matrix().to_rows());
  return {{"group", to_json(M.group())}, {"module", to_json(M.module())}, {"action", act}};
}

inline GModule gmodule_from_json(const Json& j) {
  FinGroup G = fingroup_from_json(need<Json>(j, "group"));
  FinAb A = group_from_json(need<Json>(j, "module"));
  std::vector<FinHom> rho;
  try {
    for (const auto& m : need<std::vector<std::vector<std::vector<long long>>>>(j, "action")) {
      if (m.size() != A.rank()) throw ParseError("action matrix has the wrong number of rows");
      rho.emplace_back(A, A, IntMat::from_rows(m, A.rank()));
    }
    return GModule(G, A, rho);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// symbols

inline std::vector<RatFn> parse_entries(const RatFieldPtr& K, const std::string& text) {
  std::vector<RatFn> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(K, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline Json to_json(const SymbolSum& s) {
  Json terms = Json::array();
  for (const auto& [n, sym] : s.terms()) {
    Json e = Json::array();
    for (const auto& x : sym.entries()) e.push_back(to_text(x));
    terms.push_back({{"n", n}, {"entries", e}});
  }
  return {{"field", s.field()->descriptor()}, {"degree", s.degree()}, {"terms", terms}};
}

}  // namespace charp::io
