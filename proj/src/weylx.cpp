#include "sphroots/weylx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sphroots/errors.hpp"

namespace sphroots {

Lattice::Lattice(std::vector<Vec> basis, std::int64_t p, std::size_t dim) : basis_(std::move(basis)), p_(p) {
  validate_characteristic(p);
  dim_ = basis_.empty() ? dim : basis_.front().size();
  for (const auto& b : basis_)
    if (b.size() != dim_) throw ValidationError("lattice basis vectors have different lengths");
  if (!linearly_independent(basis_)) throw ValidationError("lattice basis is linearly dependent");
}

std::optional<Vec> Lattice::coords(const Vec& v) const {
  if (v.size() != dim_) return std::nullopt;
  if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return coordinates(basis_, v);
}

bool Lattice::contains(const Vec& v) const {
  auto c = coords(v);
  return c && std::all_of(c->begin(), c->end(), [&](const Rational& x) { return has_p_power_denominator(x, p_); });
}

bool Lattice::contains_strict(const Vec& v) const {
  auto c = coords(v);
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.is_integer(); });
}

namespace {

std::int64_t max_coeff(const Coeffs& c) {
  std::int64_t m = 1;
  for (auto x : c) m = std::max<std::int64_t>(m, std::llabs(x));
  return m;
}

Vec rule_vector(const RootSystem& system, const std::vector<Segment>& rule, const PatternMatch& m) {
  const auto c = expand_segments(rule, static_cast<int>(m.rank));
  Vec v = zero_vec(system.dim());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k]) v = add(v, scale(Rational(c[k]), system.simple_root(m.embedding[k])));
  return v;
}

// sigma = a1 + q a2 with a1 = node of coefficient 1, a2 = node of coefficient q
std::pair<int, int> frobenius_nodes(const PatternMatch& m) { return {m.embedding[1], m.embedding[0]}; }

bool in_coroot_span(const RootSystem& system, const Vec& v, NodeSet sp) {
  std::vector<Vec> span;
  for (int g : sp.elements()) span.push_back(system.coroot(system.simple_root(g)));
  if (span.empty()) return is_zero(v);
  return coordinates(span, v).has_value();
}

struct Analysis {
  std::optional<std::string> violation;
  std::vector<SphericalRoot> roots;
  std::vector<Vec> basis;
  LatticeProvenance provenance = LatticeProvenance::SigmaSpanDefault;
};

Analysis analyze(const RootSystem& system, std::int64_t p, const std::vector<Coeffs>& sigma, NodeSet sp,
                 const std::optional<std::vector<Vec>>& lattice) {
  Analysis a;
  auto fail = [&](std::string why) {
    a.violation = std::move(why);
    return a;
  };
  validate_characteristic(p);
  if (!sp.subset_of(NodeSet::all(system.rank()))) return fail("S^P contains nodes outside " + system.name());
  std::set<Coeffs> seen;
  for (const auto& c : sigma) {
    if (static_cast<int>(c.size()) != system.rank())
      return fail("spherical root has " + std::to_string(c.size()) + " coefficients, rank is " +
                  std::to_string(system.rank()));
    if (!seen.insert(c).second) return fail("spherical root " + format_coeffs(c) + " listed twice");
    if (!is_spherical_root(c, system, p, max_coeff(c)))
      return fail(format_coeffs(c) + " is not a spherical root of " + system.name() + " at p=" + std::to_string(p));
    a.roots.push_back(*classify(system, c, p, max_coeff(c)));
    if (!compatible(a.roots.back(), sp, system)) return fail(format_coeffs(c) + " is not compatible with S^P");
  }

  // lattice basis in ambient coordinates
  if (lattice) {
    a.provenance = LatticeProvenance::UserSupplied;
    for (const auto& v : *lattice) {
      if (static_cast<int>(v.size()) != system.rank()) return fail("lattice vector has wrong length");
      a.basis.push_back(system.from_rational_coeffs(v));
    }
    if (!linearly_independent(a.basis)) return fail("lattice basis is linearly dependent");
  } else {
    for (const auto& row : integer_row_basis(sigma)) a.basis.push_back(system.from_coeffs(row));
  }
  const Lattice lat(a.basis, p, system.dim());

  for (const auto& s : a.roots) {
    const Vec v = system.from_coeffs(s.coefficients);
    const std::string name = format_coeffs(s.coefficients);
    if (!lat.contains(v)) return fail(name + " does not lie in the lattice");
    for (std::int64_t m = 2; m <= max_coeff(s.coefficients); ++m) {
      if (p != 1 && m % p == 0) continue;  // powers of p are units in Z[1/p]
      if (std::any_of(s.coefficients.begin(), s.coefficients.end(), [&](auto x) { return x % m != 0; })) continue;
      if (lat.contains(scale(Rational(1, m), v)))
        return fail(name + " is not primitive: " + name + " / " + std::to_string(m) + " lies in the lattice");
    }
  }

  // weights of B-semi-invariants are killed by the coroots of S^P
  for (int g : sp.elements())
    for (const auto& b : a.basis)
      if (!system.pairing(b, system.simple_root(g)).is_zero())
        return fail("lattice not orthogonal to the coroot of " + DynkinDiagram::node_name(g) + " in S^P");

  for (const auto& s : a.roots) {
    const std::string name = format_coeffs(s.coefficients);
    for (const auto& m : s.matches) {
      if (m.pattern->frobenius) {
        const auto [a1, a2] = frobenius_nodes(m);
        for (const auto& b : a.basis)
          if (system.pairing(b, system.simple_root(a1)) !=
              system.pairing(b, system.simple_root(a2)) / Rational(m.q))
            return fail(name + ": the functional " + DynkinDiagram::node_name(a1) + "^vee - (1/" +
                        std::to_string(m.q) + ") " + DynkinDiagram::node_name(a2) +
                        "^vee does not vanish on the lattice");
      }
    }
    // orthogonal decomposition condition, for the compatible match carrying one
    bool has_decomposition = false, decomposition_ok = false;
    for (const auto& m : s.matches) {
      if (!m.pattern->decomposition || m.black != (sp & s.support)) continue;
      has_decomposition = true;
      const auto& d = *m.pattern->decomposition;
      const Vec alpha = rule_vector(system, d.alpha, m), beta = rule_vector(system, d.beta, m);
      const Vec lam = sub(scale(d.u.reciprocal(), system.coroot(alpha)), scale(d.v.reciprocal(), system.coroot(beta)));
      decomposition_ok = decomposition_ok || in_coroot_span(system, lam, sp);
    }
    if (has_decomposition && !decomposition_ok)
      return fail(name + ": u^-1 alpha^vee - v^-1 beta^vee is not in the span of the S^P coroots");
  }

  const auto parity = axiom_sigma1_check(system, sigma);
  if (!parity.parity_clean()) {
    for (const auto& e : parity.entries)
      if (!e.even)
        return fail("parity: <" + format_coeffs(e.sigma) + ", " + DynkinDiagram::node_name(e.alpha) +
                    "^vee> = " + e.pairing.str() + " is odd although 2" + DynkinDiagram::node_name(e.alpha) +
                    " is in Sigma");
  }
  return a;
}

}  // namespace

std::optional<std::string> datum_violation(const RootSystem& system, std::int64_t p, const std::vector<Coeffs>& sigma,
                                           NodeSet sp, const std::optional<std::vector<Vec>>& lattice) {
  try {
    return analyze(system, p, sigma, sp, lattice).violation;
  } catch (const ValidationError& e) {
    return std::string(e.what());
  }
}

SphericalDatum::SphericalDatum(std::shared_ptr<const RootSystem> system, std::int64_t p, std::vector<Coeffs> sigma,
                               NodeSet sp, std::optional<std::vector<Vec>> lattice)
    : system_(std::move(system)), p_(p), sp_(sp), lattice_({}, 1, system_->dim()) {
  Analysis a = analyze(*system_, p, sigma, sp, lattice);
  if (a.violation) throw ValidationError("invalid spherical datum: " + *a.violation);
  sigma_ = std::move(a.roots);
  for (const auto& s : sigma_) sigma_vec_.push_back(system_->from_coeffs(s.coefficients));
  lattice_ = Lattice(std::move(a.basis), p, system_->dim());
  provenance_ = a.provenance;
}

Matrix reflection_matrix(const RootSystem& system, const Vec& sigma) {
  if (is_zero(sigma)) throw ValidationError("reflection in the zero vector");
  const std::size_t n = system.dim();
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vec e = unit_vec(n, c);
    const Vec img = system.reflect(e, sigma);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = img[r];
  }
  return m;
}

std::optional<Matrix> restrict_to(const Matrix& ambient, const Lattice& lattice) {
  const std::size_t r = lattice.rank();
  Matrix m(r, r);
  for (std::size_t c = 0; c < r; ++c) {
    auto img = lattice.coords(ambient * lattice.basis()[c]);
    if (!img) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) m(i, c) = (*img)[i];
  }
  return m;
}

Matrix s_sigma(const RootSystem& system, const Vec& sigma, const Lattice& lattice) {
  if (is_zero(sigma)) throw ValidationError("s_sigma: sigma is zero");
  if (!lattice.in_span(sigma)) throw ValidationError("s_sigma: sigma outside the lattice span");
  return *restrict_to(reflection_matrix(system, sigma), lattice);
}

std::vector<Vec> admissible_span(const SphericalRoot& sigma, const RootSystem& system, NodeSet sp) {
  // chi = sum c_i alpha_i; constraints are linear in c via the Cartan matrix
  const int n = system.rank();
  std::vector<Vec> rows;
  for (int g : sp.elements()) {
    Vec row(n);
    for (int i = 0; i < n; ++i) row[i] = system.diagram().cartan(i, g);
    rows.push_back(row);
  }
  for (const auto& m : sigma.matches) {
    if (!m.pattern->frobenius) continue;
    const auto [a1, a2] = frobenius_nodes(m);
    Vec row(n);
    for (int i = 0; i < n; ++i)
      row[i] = Rational(system.diagram().cartan(i, a1)) - Rational(system.diagram().cartan(i, a2), m.q);
    rows.push_back(row);
    break;
  }
  std::vector<Vec> out;
  if (rows.empty()) {
    for (int i = 0; i < n; ++i) out.push_back(system.simple_root(i));
    return out;
  }
  for (const auto& c : nullspace(Matrix::from_rows(rows))) out.push_back(system.from_rational_coeffs(c));
  return out;
}

namespace {

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w{a.matrix * b.matrix, a.word};
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  return w;
}

}  // namespace

Lift lift_n_sigma(const SphericalRoot& sigma, const RootSystem& system, NodeSet sp, const std::vector<Vec>& test_span) {
  const Vec v = system.from_coeffs(sigma.coefficients);
  const std::string name = format_coeffs(sigma.coefficients);
  const Matrix target = reflection_matrix(system, v);
  std::vector<Lift> candidates;

  for (std::int64_t u : {1, 2}) {
    if (std::any_of(sigma.coefficients.begin(), sigma.coefficients.end(), [&](auto x) { return x % u != 0; }))
      continue;
    const Vec alpha = scale(Rational(1, u), v);
    if (system.is_root(alpha)) candidates.push_back({system.reflection(alpha), 1, {alpha}});
  }
  for (const auto& m : sigma.matches) {
    if (m.pattern->frobenius) {
      const auto [a1, a2] = frobenius_nodes(m);
      candidates.push_back({compose(system.simple_reflection(a1), system.simple_reflection(a2)), 2,
                            {system.simple_root(a1), system.simple_root(a2)}});
    }
    if (m.pattern->decomposition && m.black == (sp & sigma.support)) {
      const auto& d = *m.pattern->decomposition;
      const Vec alpha = rule_vector(system, d.alpha, m), beta = rule_vector(system, d.beta, m);
      if (!system.is_root(alpha) || !system.is_root(beta) || !system.form(alpha, beta).is_zero())
        throw VerificationError(name, "tabulated decomposition does not consist of orthogonal roots");
      candidates.push_back({compose(system.reflection(alpha), system.reflection(beta)), 3, {alpha, beta}});
    }
  }
  if (candidates.empty()) throw VerificationError(name, "no case of the lift lemma applies");
  for (auto& c : candidates) {
    bool ok = true;
    for (const auto& t : test_span)
      if (!(c.element.matrix * t == target * t)) {
        ok = false;
        break;
      }
    if (ok) return std::move(c);
  }
  throw VerificationError(name, "no lift restricts to s_sigma on the lattice span");
}

Lift lift_n_sigma(const SphericalRoot& sigma, const SphericalDatum& datum) {
  if (std::find(datum.sigma().begin(), datum.sigma().end(), sigma) == datum.sigma().end())
    throw ValidationError("lift_n_sigma: " + format_coeffs(sigma.coefficients) + " is not in Sigma");
  return lift_n_sigma(sigma, datum.system(), datum.sp(), datum.lattice().basis());
}

LittleWeylGroup generate_W_X(const SphericalDatum& datum) {
  LittleWeylGroup g;
  const auto& lat = datum.lattice();
  for (std::size_t i = 0; i < datum.sigma().size(); ++i) {
    g.generators.push_back(s_sigma(datum.system(), datum.sigma_vectors()[i], lat));
    g.lifts.push_back(lift_n_sigma(datum.sigma()[i], datum));
  }
  const std::uint64_t bound = datum.system().weyl_order();
  g.elements.push_back(Matrix::identity(lat.rank()));
  g.words.push_back({});
  std::unordered_set<Matrix, MatrixHash> seen{g.elements.front()};
  for (std::size_t cur = 0; cur < g.elements.size(); ++cur) {
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      Matrix m = g.generators[k] * g.elements[cur];
      if (!seen.insert(m).second) continue;
      if (g.elements.size() >= bound)
        throw VerificationError("W_X", "closure exceeds |W| = " + std::to_string(bound));
      std::vector<int> word{static_cast<int>(k)};
      word.insert(word.end(), g.words[cur].begin(), g.words[cur].end());
      g.elements.push_back(std::move(m));
      g.words.push_back(std::move(word));
    }
  }
  return g;
}

std::vector<Vec> build_R_X(const SphericalDatum& datum, const LittleWeylGroup& wx) {
  const auto& lat = datum.lattice();
  const auto& sys = datum.system();
  auto to_ambient = [&](const Vec& c) {
    Vec v = zero_vec(lat.dim());
    for (std::size_t k = 0; k < c.size(); ++k) v = add(v, scale(c[k], lat.basis()[k]));
    return v;
  };
  std::vector<Vec> out;
  std::unordered_set<Vec, VecHash> seen;
  for (const auto& g : wx.elements)
    for (const auto& s : datum.sigma_vectors()) {
      Vec v = to_ambient(g * *lat.coords(s));
      if (seen.insert(v).second) out.push_back(std::move(v));
    }
  for (const auto& s : datum.sigma_vectors())
    for (const auto& v : out)
      if (!seen.count(sys.reflect(v, s))) throw VerificationError("R_X", "orbit not closed under s_sigma");
  for (const auto& v : out) {
    auto c = sys.to_coeffs(v);
    if (!c || !std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.is_integer(); }))
      throw VerificationError("R_X", "element outside ZS");
    if (!lat.contains(v)) throw VerificationError("R_X", "element outside Xi_p");
    std::int64_t bound = 1;
    for (const auto& x : *c) bound = std::max<std::int64_t>(bound, std::llabs(x.num()));
    for (std::int64_t m = 2; m <= bound; ++m) {
      if (datum.p() != 1 && m % datum.p() == 0) continue;
      if (std::any_of(c->begin(), c->end(), [&](const Rational& x) { return x.num() % m != 0; })) continue;
      if (lat.contains(scale(Rational(1, m), v))) throw VerificationError("R_X", "element not primitive");
    }
  }
  return out;
}

std::vector<InvarianceVerdict> check_lattice_invariance(const Lattice& lattice,
                                                        const std::vector<Matrix>& ambient_generators,
                                                        const std::vector<std::string>& names) {
  std::vector<InvarianceVerdict> out;
  for (std::size_t k = 0; k < ambient_generators.size(); ++k) {
    InvarianceVerdict v{k < names.size() ? names[k] : "g" + std::to_string(k + 1), true, true};
    for (const auto& b : lattice.basis()) {
      auto c = lattice.coords(ambient_generators[k] * b);
      if (!c) {
        v.xi_p = v.strict = false;
        break;
      }
      for (const auto& x : *c) {
        v.xi_p = v.xi_p && has_p_power_denominator(x, lattice.p());
        v.strict = v.strict && x.is_integer();
      }
    }
    out.push_back(v);
  }
  return out;
}

bool Sigma1Report::parity_clean() const {
  return std::all_of(entries.begin(), entries.end(), [](const Sigma1Entry& e) { return e.even; });
}

bool Sigma1Report::sign_clean() const {
  return std::all_of(entries.begin(), entries.end(), [](const Sigma1Entry& e) { return e.nonpositive; });
}

Sigma1Report axiom_sigma1_check(const RootSystem& system, const std::vector<Coeffs>& sigma) {
  Sigma1Report r;
  const int n = system.rank();
  for (int a = 0; a < n; ++a) {
    Coeffs two(n, 0);
    two[a] = 2;
    if (std::find(sigma.begin(), sigma.end(), two) == sigma.end()) continue;
    for (const auto& s : sigma) {
      if (s == two) continue;
      std::int64_t v = 0;
      for (int j = 0; j < n; ++j) v += s[j] * system.diagram().cartan(j, a);
      r.entries.push_back({a, s, Rational(v), v % 2 == 0, v <= 0});
    }
  }
  return r;
}

}  // namespace sphroots
