#pragma once

// Exact realization of finite root systems in epsilon coordinates.
//
// Each simple component gets the standard Bourbaki realization in its own
// block of coordinates; the ambient space is the direct sum. The
// W-invariant scalar product is the coordinate dot product, rescaled per
// component so that short roots have squared length 2 (B_n and F_4 get a
// factor 2, all other types factor 1). The scale factors are exposed via
// component_scale() so reported lengths can be converted back.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sphroots/dynkin.hpp"
#include "sphroots/linalg.hpp"

namespace sphroots {

using Coeffs = std::vector<std::int64_t>;  // coefficients on simple roots

struct WeylElement {
  Matrix matrix;           // acts on ambient epsilon coordinates
  std::vector<int> word;   // simple reflections, applied right to left
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram diagram);
  // Same realization, but with the scalar product scaled by an extra
  // positive factor per component (another admissible W-invariant form).
  RootSystem(DynkinDiagram diagram, std::vector<Rational> extra_scale);

  static RootSystem parse(std::string_view type) { return RootSystem(DynkinDiagram::parse(type)); }

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  std::size_t dim() const { return dim_; }
  std::string name() const { return diagram_.name(); }

  const std::vector<Vec>& simple_roots() const { return simple_; }
  const Vec& simple_root(int i) const { return simple_[i]; }
  // every root: positive roots by height, then negative roots
  const std::vector<Vec>& roots() const { return roots_; }
  std::span<const Vec> positive_roots() const { return {roots_.data(), positive_count_}; }
  const Coeffs& root_coeffs(std::size_t idx) const { return root_coeffs_[idx]; }
  std::optional<std::size_t> root_index(const Vec& v) const;
  bool is_root(const Vec& v) const { return root_index(v).has_value(); }

  Rational form(const Vec& a, const Vec& b) const;
  Rational norm2(const Vec& a) const { return form(a, a); }
  const Rational& component_scale(int component) const { return scale_[component]; }

  // <chi, alpha^vee> = 2 (chi, alpha) / (alpha, alpha)
  Rational pairing(const Vec& chi, const Vec& alpha) const;
  Vec coroot(const Vec& alpha) const;  // alpha^vee as a vector, w.r.t. form duality

  Vec from_coeffs(const Coeffs& c) const;
  Vec from_rational_coeffs(const Vec& c) const;
  // coefficients in simple roots, if v lies in their span
  std::optional<Vec> to_coeffs(const Vec& v) const;

  // s_alpha as an ambient matrix; `word` filled when alpha is a root
  WeylElement reflection(const Vec& alpha) const;
  WeylElement simple_reflection(int i) const;
  Vec reflect(const Vec& chi, const Vec& alpha) const;

  // Cartan matrix recomputed from the realization
  std::vector<std::vector<int>> recovered_cartan() const;

  // |W| from the classification formula
  std::uint64_t weyl_order() const;
  // All of W as matrices; refuses if |W| exceeds `budget`
  std::vector<WeylElement> weyl_group(std::uint64_t budget = 200000) const;

  // true iff some w in W maps alpha, beta to two orthogonal simple roots
  bool very_orthogonal(const Vec& alpha, const Vec& beta) const;

 private:
  void realize();
  void close_roots();

  DynkinDiagram diagram_;
  std::size_t dim_ = 0;
  std::vector<Vec> simple_;
  std::vector<Rational> scale_;             // per component
  std::vector<int> coord_component_;        // ambient coordinate -> component
  std::vector<Vec> roots_;
  std::vector<Coeffs> root_coeffs_;
  std::vector<std::vector<int>> root_words_;  // root = s_word(simple[word_base])
  std::vector<int> root_base_;
  std::size_t positive_count_ = 0;
  std::unordered_map<Vec, std::size_t, VecHash> index_;
};

}  // namespace sphroots
