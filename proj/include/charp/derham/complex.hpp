#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "charp/derham/forms.hpp"
#include "charp/fields/pbasis.hpp"
#include "charp/linalg.hpp"

namespace charp {

/// the k^p-basis {t^m dt_I/t_I} of Omega^r, ordered lexicographically in (m, I)
struct Grid {
  std::uint32_t p = 2;
  int d = 0;
  int r = 0;
  std::size_t nmon = 1;
  std::vector<Subset> subsets;

  Grid() = default;
  Grid(std::uint32_t p_, int d_, int r_) : p(p_), d(d_), r(r_), nmon(pmon_count(p_, d_)), subsets(subsets_of_size(d_, r_)) {}

  std::size_t size() const { return nmon * subsets.size(); }
  std::size_t index(std::size_t m, std::size_t i) const { return m * subsets.size() + i; }
  std::size_t subset_pos(Subset I) const {
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (subsets[i] == I) return i;
    throw InvalidArgument("subset not in grid");
  }
  Monomial monomial(std::size_t pos) const { return pmon_monomial(p, d, pos / subsets.size()); }
  Subset subset(std::size_t pos) const { return subsets[pos % subsets.size()]; }
};

/// coordinates of w in the grid, stored as p-th roots
inline std::vector<RatFn> grid_coordinates(const DiffForm& w, const Grid& g) {
  const auto& K = w.field();
  std::vector<RatFn> c(g.size(), RatFn(K));
  for (const auto& [I, a] : w.terms()) {
    auto dec = p_monomial_decompose(a);
    std::size_t ip = g.subset_pos(I);
    for (std::size_t m = 0; m < dec.a.size(); ++m) c[g.index(m, ip)] = dec.a[m];
  }
  return c;
}

inline DiffForm grid_form(const RatFieldPtr& K, const Grid& g, const std::vector<RatFn>& c) {
  DiffForm w(K, g.r);
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    if (c[pos].is_zero()) continue;
    w.add_term(g.subset(pos), c[pos].frobenius() * RatFn::monomial(K, g.monomial(pos)));
  }
  return w;
}

/// a k^p-subspace of Omega^r with a constant echelon basis in grid coordinates
class KpSubspace {
 public:
  KpSubspace() = default;
  KpSubspace(FieldPtr F, Grid g, CodeRref basis) : F_(std::move(F)), grid_(std::move(g)), basis_(std::move(basis)) {}

  int degree() const { return grid_.r; }
  const Grid& grid() const { return grid_; }
  std::size_t dim() const { return basis_.rank(); }
  const CodeRref& echelon() const { return basis_; }

  /// subtract the basis so that every pivot coordinate vanishes
  std::vector<RatFn> reduce(std::vector<RatFn> c) const {
    for (std::size_t i = 0; i < basis_.rows.size(); ++i) {
      std::size_t pc = basis_.pivots[i];
      if (c[pc].is_zero()) continue;
      RatFn f = c[pc];
      const auto& row = basis_.rows[i];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0) c[k] -= f.scaled(row[k]);
    }
    return c;
  }

  bool contains_coords(const std::vector<RatFn>& c) const {
    for (const auto& x : reduce(c))
      if (!x.is_zero()) return false;
    return true;
  }
  bool contains(const DiffForm& w) const { return contains_coords(grid_coordinates(w, grid_)); }

  std::vector<DiffForm> basis_forms(const RatFieldPtr& K) const {
    std::vector<DiffForm> out;
    for (const auto& row : basis_.rows) {
      std::vector<RatFn> c;
      c.reserve(row.size());
      for (auto x : row) c.push_back(RatFn::constant(K, x));
      out.push_back(grid_form(K, grid_, c));
    }
    return out;
  }

  /// every basis vector of *this lies in other
  bool is_subspace_of(const KpSubspace& other) const {
    for (const auto& row : basis_.rows) {
      CodeMatrix m = other.basis_.rows;
      m.push_back(row);
      if (rref_codes(*F_, m, grid_.size()).rank() != other.dim()) return false;
    }
    return true;
  }

 private:
  FieldPtr F_;
  Grid grid_;
  CodeRref basis_;
};

/// element of Omega^r / B^r, kept as fully reduced grid coordinates
struct FormClass {
  int degree = 0;
  std::vector<RatFn> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const FormClass& a, const FormClass& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
  friend bool operator!=(const FormClass& a, const FormClass& b) { return !(a == b); }
  friend FormClass operator+(FormClass a, const FormClass& b) {
    if (a.degree != b.degree) throw DegreeMismatch("class degrees differ");
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend FormClass operator-(FormClass a, const FormClass& b) {
    if (a.degree != b.degree) throw DegreeMismatch("class degrees differ");
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  /// multiplication by the k^p-scalar lambda^p
  FormClass times_pth_power(const RatFn& lambda) const {
    FormClass r = *this;
    for (auto& c : r.coords) c = c * lambda;
    return r;
  }
};

struct Dims {
  std::size_t dim_omega = 0;
  std::size_t z = 0;
  std::size_t b = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Omega^* over k with its subspaces B^r, Z^r for 0 <= r <= d+1
class DeRhamComplex {
 public:
  explicit DeRhamComplex(RatFieldPtr K) : K_(std::move(K)) {
    const int d = K_->d();
    const auto& F = K_->gf();
    for (int r = 0; r <= d + 1; ++r) grids_.emplace_back(K_->p(), d, r);
    B_.resize(static_cast<std::size_t>(d) + 2);
    Z_.resize(static_cast<std::size_t>(d) + 2);
    B_[0] = KpSubspace(K_->gf_ptr(), grids_[0], CodeRref{});
    for (int r = 0; r <= d; ++r) {
      const Grid& src = grids_[static_cast<std::size_t>(r)];
      const Grid& dst = grids_[static_cast<std::size_t>(r) + 1];
      // images[j] = coordinates of d(t^m dt_I/t_I) for grid position j
      CodeMatrix images(src.size(), std::vector<GaloisField::Code>(dst.size(), 0));
      for (std::size_t pos = 0; pos < src.size(); ++pos) {
        auto m = pmon_tuple(K_->p(), d, pos / src.subsets.size());
        Subset I = src.subset(pos);
        for (int j = 0; j < d; ++j) {
          if (((I >> j) & 1u) || m[static_cast<std::size_t>(j)] == 0) continue;
          Subset J = Subset{1} << j;
          GaloisField::Code v = F.from_int(m[static_cast<std::size_t>(j)]);
          if (wedge_sign(J, I) < 0) v = F.neg(v);
          images[pos][dst.index(pos / src.subsets.size(), dst.subset_pos(I | J))] = v;
        }
      }
      CodeMatrix dmat = transpose(images, dst.size());
      Z_[static_cast<std::size_t>(r)] =
          KpSubspace(K_->gf_ptr(), src, rref_codes(F, nullspace_codes(F, dmat, src.size()), src.size()));
      B_[static_cast<std::size_t>(r) + 1] = KpSubspace(K_->gf_ptr(), dst, rref_codes(F, images, dst.size()));
    }
    Z_[static_cast<std::size_t>(d) + 1] = KpSubspace(K_->gf_ptr(), grids_.back(), CodeRref{});
  }

  const RatFieldPtr& field() const { return K_; }
  int d() const { return K_->d(); }

  const Grid& grid(int r) const { return grids_[slot(r)]; }
  const KpSubspace& B(int r) const { return B_[slot(r)]; }
  const KpSubspace& Z(int r) const { return Z_[slot(r)]; }

  Dims dims(int r) const {
    Dims out{grid(r).size(), Z(r).dim(), B(r).dim()};
    const std::size_t c = binomial(d(), r);
    if (out.z - out.b != c) throw std::logic_error("z_r - b_r != C(d,r)");
    if (r <= d() && out.z + B(r + 1).dim() != out.dim_omega) throw std::logic_error("z_r + b_{r+1} != dim Omega^r");
    return out;
  }

  std::vector<RatFn> coordinates(const DiffForm& w) const {
    if (w.degree() > d()) return {};
    return grid_coordinates(w, grid(w.degree()));
  }

  bool is_closed(const DiffForm& w) const { return exterior_d(w).is_zero(); }

  /// pi: Omega^r -> Omega^r / B^r
  FormClass project(const DiffForm& w) const {
    if (w.degree() > d()) return FormClass{w.degree(), {}};
    return FormClass{w.degree(), B(w.degree()).reduce(coordinates(w))};
  }
  FormClass reduce_coords(int r, std::vector<RatFn> c) const { return FormClass{r, B(r).reduce(std::move(c))}; }

  /// a representative form of a class
  DiffForm representative(const FormClass& c) const { return grid_form(K_, grid(c.degree), c.coords); }

  /// C^{-1}(sum a_I dt_I/t_I) = class of sum a_I^p dt_I/t_I
  FormClass inverse_cartier(const DiffForm& w) const {
    if (w.degree() > d()) return FormClass{w.degree(), {}};
    const Grid& g = grid(w.degree());
    std::vector<RatFn> c(g.size(), RatFn(K_));
    for (const auto& [I, a] : w.terms()) c[g.index(0, g.subset_pos(I))] = a;
    return reduce_coords(w.degree(), std::move(c));
  }

  DiffForm cartier(const DiffForm& w) const {
    if (!is_closed(w)) throw NotClosed("cartier of a form that is not closed");
    return cartier_of_class(project(w));
  }

  /// the Cartier operator on Z^r / B^r
  DiffForm cartier_of_class(const FormClass& cls) const {
    const Grid& g = grid(cls.degree);
    DiffForm out(K_, cls.degree);
    for (std::size_t pos = 0; pos < cls.coords.size(); ++pos) {
      if (cls.coords[pos].is_zero()) continue;
      if (pos >= g.subsets.size()) throw NotClosed("class has components off the dt_I/t_I span");
      out.add_term(g.subsets[pos], cls.coords[pos]);
    }
    return out;
  }

  /// (C^{-1} - pi)(w) = 0
  bool is_logarithmic(const DiffForm& w) const { return (inverse_cartier(w) - project(w)).is_zero(); }

 private:
  std::size_t slot(int r) const {
    if (r < 0 || r > d() + 1)
      throw DegreeOutOfRange("degree " + std::to_string(r) + " outside 0.." + std::to_string(d() + 1));
    return static_cast<std::size_t>(r);
  }

  RatFieldPtr K_;
  std::vector<Grid> grids_;
  std::vector<KpSubspace> B_;
  std::vector<KpSubspace> Z_;
};

}  // namespace charp
