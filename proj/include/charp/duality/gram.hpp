#pragma once

#include <string>
#include <vector>

#include "charp/derham/text.hpp"
#include "charp/linalg.hpp"

namespace charp {

enum class GramKind { Phi1, PiPhi1, Phi2, Phi3 };

inline std::string gram_kind_name(GramKind k) {
  switch (k) {
    case GramKind::Phi1: return "phi1";
    case GramKind::PiPhi1: return "pi_phi1";
    case GramKind::Phi2: return "phi2";
    default: return "phi3";
  }
}

inline GramKind parse_gram_kind(const std::string& s) {
  if (s == "phi1") return GramKind::Phi1;
  if (s == "pi_phi1" || s == "piphi1" || s == "pi-phi1") return GramKind::PiPhi1;
  if (s == "phi2") return GramKind::Phi2;
  if (s == "phi3") return GramKind::Phi3;
  throw InvalidArgument("unknown pairing '" + s + "' (expected phi1, pi_phi1, phi2, phi3)");
}

struct GramMatrix {
  GramKind which = GramKind::PiPhi1;
  int r = 0;
  std::vector<std::string> rows, cols;
  std::vector<DiffForm> row_forms, col_forms;
  /// for k^p-valued pairings the p-th roots of the values, else the values
  Matrix<RatFn> entries;
  bool kp_scalars = true;
  std::string target;

  RatFn value(std::size_t i, std::size_t j) const {
    return kp_scalars ? entries[i][j].frobenius() : entries[i][j];
  }
};

struct GramCertificate {
  std::size_t rank = 0;
  bool left_nondeg = false;
  bool right_nondeg = false;
  bool perfect = false;
};

inline GramCertificate certify(const Matrix<RatFn>& m, std::size_t ncols) {
  GramCertificate c;
  c.rank = m.empty() ? 0 : rank(m, ncols);
  c.left_nondeg = c.rank == m.size();
  c.right_nondeg = c.rank == ncols;
  c.perfect = c.left_nondeg && c.right_nondeg;
  return c;
}

inline GramCertificate certify(const GramMatrix& g) { return certify(g.entries, g.cols.size()); }

/// the dt/t coordinate (as a p-th root) of pi(w), w of top degree
inline RatFn top_class_root(const DeRhamComplex& C, const DiffForm& w) {
  FormClass c = C.project(w);
  return c.coords.empty() ? RatFn(C.field()) : c.coords[0];
}

/// grid positions of Omega^r that are not pivots of the given subspace
inline std::vector<std::size_t> complement_positions(const KpSubspace& S) {
  std::vector<bool> piv(S.grid().size(), false);
  for (auto c : S.echelon().pivots) piv[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

inline GramMatrix gram(const DeRhamComplex& C, GramKind which, int r) {
  const int d = C.d();
  if (r < 0 || r > d) throw DegreeOutOfRange("pairing degree " + std::to_string(r) + " outside 0.." + std::to_string(d));
  const auto& K = C.field();
  GramMatrix g;
  g.which = which;
  g.r = r;
  auto grid_elem = [&](const Grid& gr, std::size_t pos) {
    return DiffForm::basis(RatFn::monomial(K, gr.monomial(pos)), gr.subset(pos));
  };
  auto add_row = [&](DiffForm w, std::string label) {
    g.rows.push_back(label.empty() ? form_text(w) : std::move(label));
    g.row_forms.push_back(std::move(w));
  };
  auto add_col = [&](DiffForm w, std::string label) {
    g.cols.push_back(label.empty() ? form_text(w) : std::move(label));
    g.col_forms.push_back(std::move(w));
  };
  switch (which) {
    case GramKind::Phi1:
      g.kp_scalars = false;
      g.target = "Omega^d coordinate along dlog(t1..td)";
      for (Subset I : subsets_of_size(d, r)) add_row(DiffForm::dlog_basis(K, I), "");
      for (Subset J : subsets_of_size(d, d - r)) add_col(DiffForm::dlog_basis(K, J), "");
      break;
    case GramKind::PiPhi1:
      g.target = "Omega^d/B^d coordinate along dlog(t1..td)";
      for (std::size_t i = 0; i < C.grid(r).size(); ++i) add_row(grid_elem(C.grid(r), i), "");
      for (std::size_t j = 0; j < C.grid(d - r).size(); ++j) add_col(grid_elem(C.grid(d - r), j), "");
      break;
    case GramKind::Phi2:
      g.target = "Omega^d/B^d coordinate along dlog(t1..td)";
      for (auto& w : C.Z(r).basis_forms(K)) add_row(w, "");
      for (auto pos : complement_positions(C.B(d - r)))
        add_col(grid_elem(C.grid(d - r), pos), "[" + grid_label(K, C.grid(d - r), pos) + "] mod B");
      break;
    case GramKind::Phi3:
      g.target = "Omega^d/B^d coordinate along dlog(t1..td)";
      for (auto pos : complement_positions(C.Z(r)))
        add_row(grid_elem(C.grid(r), pos), "[" + grid_label(K, C.grid(r), pos) + "] mod Z");
      for (auto& w : C.B(d - r).basis_forms(K)) add_col(w, "");
      break;
  }
  const Subset top = d == 0 ? 0 : (Subset{1} << d) - 1;
  g.entries.assign(g.rows.size(), std::vector<RatFn>(g.cols.size(), RatFn(K)));
  for (std::size_t i = 0; i < g.rows.size(); ++i)
    for (std::size_t j = 0; j < g.cols.size(); ++j) {
      DiffForm w = wedge(g.row_forms[i], g.col_forms[j]);
      g.entries[i][j] = g.kp_scalars ? top_class_root(C, w) : w.coeff(top);
    }
  return g;
}

}  // namespace charp
