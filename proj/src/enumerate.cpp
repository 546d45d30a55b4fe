#include "sphroots/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sphroots/errors.hpp"

namespace sphroots {

NodeSet support_of(const Coeffs& c) {
  NodeSet s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

std::string format_coeffs(const Coeffs& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += c[i] > 0 ? " + " : " - ";
    else if (c[i] < 0) s += "-";
    const auto a = std::llabs(c[i]);
    if (a != 1) s += std::to_string(a);
    s += DynkinDiagram::node_name(static_cast<int>(i));
  }
  return s.empty() ? "0" : s;
}

std::optional<SphericalRoot> classify(const RootSystem& system, const Coeffs& sigma, std::int64_t p,
                                      std::int64_t q_max) {
  SphericalRoot r{sigma, support_of(sigma), {}};
  r.matches = pattern_match(system.diagram(), r.support, sigma, p, q_max);
  if (r.matches.empty()) return std::nullopt;
  return r;
}

bool is_spherical_root(const Coeffs& sigma, const RootSystem& system, std::int64_t p, std::int64_t q_max) {
  if (std::any_of(sigma.begin(), sigma.end(), [](auto x) { return x < 0; })) return false;
  if (std::all_of(sigma.begin(), sigma.end(), [](auto x) { return x == 0; })) return false;
  return classify(system, sigma, p, q_max).has_value();
}

bool is_reduced(const SphericalRoot& sigma, const RootSystem& system, std::int64_t p, std::int64_t q_max) {
  Coeffs half = sigma.coefficients;
  for (auto& x : half) {
    if (x % 2 != 0) return true;
    x /= 2;
  }
  return !is_spherical_root(half, system, p, q_max);
}

std::vector<SphericalRoot> spherical_roots_of_G(const RootSystem& system, std::int64_t p, std::int64_t q_max) {
  const auto qs = frobenius_parameters(p, q_max);
  const DynkinDiagram& d = system.diagram();
  const NodeSet everything = NodeSet::all(d.rank());
  std::set<Coeffs> found;
  for (const RootPattern* r : table_rows(p)) {
    for (int n = r->min_rank; n <= std::min(r->max_rank, d.rank()); ++n) {
      const auto pattern = r->support_diagram(n);
      for (const auto& emb : diagram_embeddings(pattern, d, everything, false)) {
        for (std::int64_t q : r->frobenius ? qs : std::vector<std::int64_t>{1}) {
          const auto c = r->coefficients_at(n, q);
          Coeffs sigma(d.rank(), 0);
          for (int k = 0; k < n; ++k) sigma[emb[k]] = c[k];
          found.insert(std::move(sigma));
        }
      }
    }
  }
  std::vector<SphericalRoot> out;
  for (const auto& c : found) {
    auto r = classify(system, c, p, q_max);
    if (!r) throw VerificationError(format_coeffs(c), "enumerated root fails to match the table");
    out.push_back(std::move(*r));
  }
  auto height = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::stable_sort(out.begin(), out.end(), [&](const SphericalRoot& a, const SphericalRoot& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    if (height(a.coefficients) != height(b.coefficients)) return height(a.coefficients) < height(b.coefficients);
    return a.coefficients > b.coefficients;
  });
  return out;
}

namespace {

// nodes outside the support orthogonal to sigma
NodeSet orthogonal_nodes(const SphericalRoot& sigma, const RootSystem& system) {
  const Vec v = system.from_coeffs(sigma.coefficients);
  NodeSet s;
  for (int i = 0; i < system.rank(); ++i)
    if (!sigma.support.contains(i) && system.form(system.simple_root(i), v).is_zero()) s.insert(i);
  return s;
}

void check_subset(NodeSet sp, const RootSystem& system) {
  if (!sp.subset_of(NodeSet::all(system.rank())))
    throw ValidationError("S^P contains nodes outside the diagram " + system.name());
}

}  // namespace

bool compatible(const SphericalRoot& sigma, NodeSet sp, const RootSystem& system) {
  check_subset(sp, system);
  if (!(sp - sigma.support).subset_of(orthogonal_nodes(sigma, system))) return false;
  const NodeSet inside = sp & sigma.support;
  return std::any_of(sigma.matches.begin(), sigma.matches.end(),
                     [&](const PatternMatch& m) { return m.black == inside; });
}

std::vector<NodeSet> compatible_sp_sets(const SphericalRoot& sigma, const RootSystem& system) {
  const NodeSet orth = orthogonal_nodes(sigma, system);
  std::set<NodeSet> out;
  for (const auto& m : sigma.matches) {
    // all subsets of the orthogonal nodes
    const std::uint32_t full = orth.bits();
    std::uint32_t sub = 0;
    do {
      out.insert(m.black | NodeSet(sub));
      sub = (sub - full) & full;
    } while (sub != 0);
  }
  return {out.begin(), out.end()};
}

std::vector<NodeSet> common_compatible_sp(const std::vector<const SphericalRoot*>& roots, const RootSystem& system) {
  std::set<NodeSet> out;
  std::vector<std::size_t> choice(roots.size(), 0);
  for (const auto* r : roots)
    if (r->matches.empty()) return {};
  while (true) {
    NodeSet sp;
    for (std::size_t k = 0; k < roots.size(); ++k) sp = sp | roots[k]->matches[choice[k]].black;
    if (std::all_of(roots.begin(), roots.end(), [&](const SphericalRoot* r) { return compatible(*r, sp, system); }))
      out.insert(sp);
    std::size_t k = 0;
    while (k < roots.size() && ++choice[k] == roots[k]->matches.size()) choice[k++] = 0;
    if (k == roots.size()) break;
  }
  return {out.begin(), out.end()};
}

SupportSplit split_support(const Coeffs& sigma, NodeSet sp) {
  const NodeSet s = support_of(sigma);
  return {s & sp, s - sp};
}

bool saturation_check(const Coeffs& sigma, NodeSet sp, const RootSystem& system) {
  const NodeSet s = support_of(sigma);
  return (system.diagram().neighbors(s) & sp).empty();
}

}  // namespace sphroots
