#include "sphroots/verify.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "sphroots/cone.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/weylx.hpp"

namespace sphroots {

namespace {

// n coefficients: first, then `fill` up to the last, then last (n >= 2)
Coeffs series(int n, std::int64_t first, std::int64_t fill, std::int64_t last) {
  Coeffs c(n, fill);
  c.front() = first;
  c.back() = last;
  return c;
}

Coeffs unit(int n, int i, std::int64_t k = 1) {
  Coeffs c(n, 0);
  c[i] = k;
  return c;
}

FamilyPair fixed(std::string label, char family, int n, PCondition cond, Coeffs s, Coeffs t) {
  return {std::move(label), family, n, n, cond, [s, t](int) { return std::make_pair(s, t); }};
}

// alpha_2 + ... + alpha_n  and  alpha_1 + 2 alpha_2 + ... + 2 alpha_n
std::pair<Coeffs, Coeffs> b_tail_pair(int n) { return {series(n, 0, 1, 1), series(n, 1, 2, 2)}; }
// 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n  and  alpha_1 + 2 alpha_2 + ... + alpha_n
std::pair<Coeffs, Coeffs> c_tail_pair(int n) { return {series(n, 0, 2, 1), series(n, 1, 2, 1)}; }

Coeffs map_coeffs(const Coeffs& abstract, const std::vector<int>& embedding, int rank) {
  Coeffs c(rank, 0);
  for (std::size_t k = 0; k < abstract.size(); ++k) c[embedding[k]] = abstract[k];
  return c;
}

std::string sp_label(const std::vector<NodeSet>& sets) {
  std::string s;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (k) s += " | ";
    s += "S^P={";
    bool first = true;
    for (int n : sets[k].elements()) {
      if (!first) s += ",";
      s += DynkinDiagram::node_name(n);
      first = false;
    }
    s += "}";
  }
  return s;
}

std::string sp_label(NodeSet sp) { return sp_label(std::vector<NodeSet>{sp}); }

bool item_less(const ReportItem& a, const ReportItem& b) {
  return std::tie(a.type, a.sigma, a.tau, a.detail) < std::tie(b.type, b.sigma, b.tau, b.detail);
}

VerificationReport make_report(std::string claim, const RootSystem& system, std::int64_t p, std::int64_t q_max) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.search_space = system.name();
  r.p = p;
  r.q_max = q_max;
  return r;
}

// Compare found pairs (with details) to an expected key set.
void reconcile(VerificationReport& report, const std::string& type, const std::map<PairKey, std::string>& found,
               const std::map<PairKey, std::string>& expected) {
  for (const auto& [key, detail] : found) {
    auto it = expected.find(key);
    report.items.push_back({type, key.first, key.second,
                            it == expected.end() ? detail : it->second + "; " + detail,
                            it == expected.end() ? Verdict::Unexpected : Verdict::Expected});
  }
  for (const auto& [key, label] : expected)
    if (!found.count(key)) report.items.push_back({type, key.first, key.second, label, Verdict::Missing});
}

std::map<PairKey, std::string> positive_pairs(const RootSystem& system, std::int64_t p, const SuiteOptions& opt) {
  auto all = spherical_roots_of_G(system, p, opt.q_max);
  std::vector<SphericalRoot> roots;
  for (auto& s : all)
    if (is_reduced(s, system, p, opt.q_max)) roots.push_back(std::move(s));
  const auto pairs = scan_pairs(
      system, roots,
      [&](const SphericalRoot& a, const SphericalRoot& b) {
        if (system.form(system.from_coeffs(a.coefficients), system.from_coeffs(b.coefficients)).sign() <= 0)
          return false;
        return frobenius_compatible(a, b.coefficients, system) && frobenius_compatible(b, a.coefficients, system);
      },
      opt.parallel);
  std::map<PairKey, std::string> found;
  for (const auto& rp : pairs)
    found[unordered_key(roots[rp.i].coefficients, roots[rp.j].coefficients)] = sp_label(rp.sp);
  return found;
}

// all abstract spherical roots with their admissible partner pairs
struct AdmissiblePair {
  Coeffs sigma, tau;
  NodeSet sp;
};

std::vector<AdmissiblePair> admissible_pairs(const RootSystem& system, std::int64_t p, const SuiteOptions& opt,
                                             const PairFilter& prefilter) {
  const auto roots = spherical_roots_of_G(system, p, opt.q_max);
  const auto pairs = scan_pairs(system, roots, prefilter, opt.parallel);
  std::vector<std::optional<AdmissiblePair>> slots(pairs.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& rp = pairs[k];
    if (auto sp = admissible_pair(system, p, roots[rp.i], roots[rp.j], rp.sp))
      slots[k] = AdmissiblePair{roots[rp.i].coefficients, roots[rp.j].coefficients, *sp};
  }
  std::vector<AdmissiblePair> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::shared_ptr<const RootSystem> share(const RootSystem& system) { return std::make_shared<const RootSystem>(system); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Expected: return "expected";
    case Verdict::Unexpected: return "unexpected";
    case Verdict::Missing: return "missing";
    case Verdict::Excluded: return "excluded";
  }
  return "?";
}

std::size_t VerificationReport::count(Verdict v) const {
  return std::count_if(items.begin(), items.end(), [&](const ReportItem& i) { return i.verdict == v; });
}

void VerificationReport::append(const VerificationReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

PairKey unordered_key(const Coeffs& a, const Coeffs& b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

std::map<PairKey, std::string> instantiate(const std::vector<FamilyPair>& families, const RootSystem& system,
                                           std::int64_t p, bool ordered) {
  std::map<PairKey, std::string> out;
  const int rank = system.rank();
  for (const auto& f : families) {
    if (!p_condition_holds(f.condition, p)) continue;
    for (int n = f.min_n; n <= std::min(f.max_n, rank); ++n) {
      const auto pattern = DynkinDiagram::parse(std::string(1, f.family) + std::to_string(n));
      const auto [s, t] = f.make(n);
      for (const auto& emb : diagram_embeddings(pattern, system.diagram(), NodeSet::all(rank), false)) {
        const Coeffs cs = map_coeffs(s, emb, rank), ct = map_coeffs(t, emb, rank);
        const PairKey key = ordered ? PairKey{cs, ct} : unordered_key(cs, ct);
        out.emplace(key, f.label);
      }
    }
  }
  return out;
}

const std::vector<FamilyPair>& positive_product_families() {
  static const std::vector<FamilyPair> f = {
      fixed("A2 (a1, a1+a2)", 'A', 2, PCondition::Any, {1, 0}, {1, 1}),
      fixed("B2 (a1, a1+a2)", 'B', 2, PCondition::Any, {1, 0}, {1, 1}),
      fixed("G2 (a2, a1+a2)", 'G', 2, PCondition::Any, {0, 1}, {1, 1}),
      fixed("B2 (a1+a2, a1+2a2)", 'B', 2, PCondition::Two, {1, 1}, {1, 2}),
      {"B_n (a2+...+an, a1+2a2+...+2an)", 'B', 2, 24, PCondition::Two, b_tail_pair},
      {"C_n (2a2+...+2a(n-1)+an, a1+2a2+...+2a(n-1)+an)", 'C', 3, 24, PCondition::Two, c_tail_pair},
      fixed("G2 (a1, 3a1+a2)", 'G', 2, PCondition::Three, {1, 0}, {3, 1}),
  };
  return f;
}

const std::vector<FamilyPair>& obtuse_pair_families() {
  static const std::vector<FamilyPair> f = {
      fixed("A2 (a1, a1+a2)", 'A', 2, PCondition::Two, {1, 0}, {1, 1}),
      {"B_n (a2+...+an, a1+2a2+...+2an)", 'B', 2, 24, PCondition::Two, b_tail_pair},
      {"C_n (2a2+...+2a(n-1)+an, a1+2a2+...+2a(n-1)+an)", 'C', 2, 24, PCondition::Two, c_tail_pair},
      fixed("G2 (a2, a1+a2)", 'G', 2, PCondition::Two, {0, 1}, {1, 1}),
  };
  return f;
}

const std::vector<FamilyPair>& nested_support_families() {
  static const std::vector<FamilyPair> f = {
      fixed("B4 (a2+2a3+3a4, a1+a2+a3+a4)", 'B', 4, PCondition::Any, {0, 1, 2, 3}, {1, 1, 1, 1}),
      {"C_n (a1, a1+2a2+...+an)", 'C', 2, 24, PCondition::Any,
       [](int n) { return std::make_pair(unit(n, 0), series(n, 1, 2, 1)); }},
      {"C_n (2a1, a1+2a2+...+an)", 'C', 2, 24, PCondition::NotTwo,
       [](int n) { return std::make_pair(unit(n, 0, 2), series(n, 1, 2, 1)); }},
      fixed("G2 (a1, a1+a2)", 'G', 2, PCondition::Any, {1, 0}, {1, 1}),
      fixed("A2 (a1, a1+a2)", 'A', 2, PCondition::Two, {1, 0}, {1, 1}),
      {"B_n (a1, a1+2a2+...+2an)", 'B', 2, 24, PCondition::Two,
       [](int n) { return std::make_pair(unit(n, 0), series(n, 1, 2, 2)); }},
      {"B_n (a2+...+an, a1+2a2+...+2an)", 'B', 2, 24, PCondition::Two, b_tail_pair},
      {"C_n (2a2+...+an, a1+2a2+...+an)", 'C', 2, 24, PCondition::Two, c_tail_pair},
      fixed("C4 (2a2+4a3+3a4, 2a1+2a2+2a3+a4)", 'C', 4, PCondition::Two, {0, 2, 4, 3}, {2, 2, 2, 1}),
      fixed("G2 (a2, a1+a2)", 'G', 2, PCondition::Two, {0, 1}, {1, 1}),
      fixed("G2 (a2, 3a1+a2)", 'G', 2, PCondition::Three, {0, 1}, {3, 1}),
  };
  return f;
}

const std::vector<Exclusion>& exclusions() {
  static const std::vector<Exclusion> e = {
      {fixed("A2 (a1, a1+a2)", 'A', 2, PCondition::NotTwo, {1, 0}, {1, 1}), false,
       "type-a-colors: positive product forces p=2 (colors of a type-a root)"},
      {fixed("B2 (a1, a1+a2)", 'B', 2, PCondition::NotTwo, {1, 0}, {1, 1}), false,
       "type-a-colors: positive product forces p=2 (colors of a type-a root)"},
      {fixed("G2 (a2, a1+a2)", 'G', 2, PCondition::NotTwo, {0, 1}, {1, 1}), false,
       "type-a-colors: positive product forces p=2 (colors of a type-a root)"},
      {fixed("G2 (a1, 3a1+a2)", 'G', 2, PCondition::Three, {1, 0}, {3, 1}), false,
       "g2-isogeny: reduced to G2 (a2, a1+a2) by the exceptional isogeny"},
      {fixed("B2 (a1+a2, a1+2a2)", 'B', 2, PCondition::Two, {1, 1}, {1, 2}), false,
       "b2-dimension: H would be a 4-dimensional semisimple subgroup of SO(5)"},
      {fixed("C3 (a2+a3, 2a1+2a2+a3)", 'C', 3, PCondition::Two, {0, 1, 1}, {2, 2, 1}), true,
       "c3-nested: H would be of type A1xA2 inside Sp(6)"},
      {fixed("B3 (a2+2a3, a1+a2+a3)", 'B', 3, PCondition::Two, {0, 1, 2}, {1, 1, 1}), true,
       "c3-nested: isogenous to the C3 case"},
  };
  return e;
}

std::optional<std::string> excluded(const RootSystem& system, std::int64_t p, const Coeffs& sigma, const Coeffs& tau) {
  // instantiated exclusion keys per (type, p); ordered and unordered kept apart
  using Index = std::pair<std::map<PairKey, std::string>, std::map<PairKey, std::string>>;
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::int64_t>, std::shared_ptr<const Index>> cache;
  std::shared_ptr<const Index> index;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{system.name(), p}];
    if (!slot) {
      auto fresh = std::make_shared<Index>();
      for (const auto& ex : exclusions())
        for (const auto& [key, label] : instantiate({ex.pair}, system, p, ex.ordered))
          (ex.ordered ? fresh->first : fresh->second).emplace(key, ex.tag);
      slot = fresh;
    }
    index = slot;
  }
  if (auto it = index->first.find({sigma, tau}); it != index->first.end()) return it->second;
  if (auto it = index->second.find(unordered_key(sigma, tau)); it != index->second.end()) return it->second;
  return std::nullopt;
}

std::vector<RootPair> scan_pairs(const RootSystem& system, const std::vector<SphericalRoot>& roots,
                                 const PairFilter& prefilter, bool parallel) {
  const std::size_t n = roots.size();
  std::vector<std::vector<RootPair>> rows(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!prefilter(roots[i], roots[j])) continue;
      auto sp = common_compatible_sp({&roots[i], &roots[j]}, system);
      if (!sp.empty()) rows[i].push_back({i, j, std::move(sp)});
    }
  }
  std::vector<RootPair> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool frobenius_compatible(const SphericalRoot& sigma, const Coeffs& chi, const RootSystem& system) {
  bool any_frobenius = false;
  const Vec v = system.from_coeffs(chi);
  for (const auto& m : sigma.matches) {
    if (!m.pattern->frobenius) continue;
    any_frobenius = true;
    const int a1 = m.embedding[1], a2 = m.embedding[0];
    if (system.pairing(v, system.simple_root(a1)) == system.pairing(v, system.simple_root(a2)) / Rational(m.q))
      return true;
  }
  return !any_frobenius;
}

std::optional<NodeSet> admissible_pair(const RootSystem& system, std::int64_t p, const SphericalRoot& sigma,
                                       const SphericalRoot& tau, const std::vector<NodeSet>& common_sp) {
  if (excluded(system, p, sigma.coefficients, tau.coefficients) ||
      excluded(system, p, tau.coefficients, sigma.coefficients))
    return std::nullopt;
  for (NodeSet sp : common_sp)
    if (!datum_violation(system, p, {sigma.coefficients, tau.coefficients}, sp, std::nullopt)) return sp;
  return std::nullopt;
}

VerificationReport verify_obtuseness_combinatorial(const RootSystem& system, std::int64_t p, SuiteOptions opt) {
  auto report = make_report("obtuse-pairs-combinatorial", system, p, opt.q_max);
  auto found = positive_pairs(system, p, opt);
  for (auto& [key, detail] : found)
    if (auto tag = excluded(system, p, key.first, key.second)) detail += "; geometrically excluded: " + *tag;
  reconcile(report, system.name(), found, instantiate(positive_product_families(), system, p, false));
  std::sort(report.items.begin(), report.items.end(), item_less);
  return report;
}

VerificationReport verify_obtuseness_theorem(const RootSystem& system, std::int64_t p, SuiteOptions opt) {
  auto report = make_report("obtuse-pairs", system, p, opt.q_max);
  std::map<PairKey, std::string> kept;
  for (auto& [key, detail] : positive_pairs(system, p, opt)) {
    if (auto tag = excluded(system, p, key.first, key.second))
      report.items.push_back({system.name(), key.first, key.second, *tag, Verdict::Excluded});
    else
      kept.emplace(key, detail);
  }
  reconcile(report, system.name(), kept, instantiate(obtuse_pair_families(), system, p, false));
  std::sort(report.items.begin(), report.items.end(), item_less);
  return report;
}

VerificationReport verify_nested_support(const RootSystem& system, std::int64_t p, SuiteOptions opt) {
  auto report = make_report("nested-support", system, p, opt.q_max);
  const auto roots = spherical_roots_of_G(system, p, opt.q_max);
  const auto pairs = scan_pairs(
      system, roots,
      [](const SphericalRoot& a, const SphericalRoot& b) {
        return a.support.subset_of(b.support) || b.support.subset_of(a.support);
      },
      opt.parallel);

  std::map<PairKey, std::string> found;
  for (const auto& rp : pairs) {
    const auto& a = roots[rp.i];
    const auto& b = roots[rp.j];
    // (sigma, tau) with |sigma| inside |tau|; both orders for equal supports
    std::vector<std::pair<const SphericalRoot*, const SphericalRoot*>> orders;
    if (a.support.subset_of(b.support)) orders.push_back({&a, &b});
    if (b.support.subset_of(a.support)) orders.push_back({&b, &a});
    for (auto [s, t] : orders) {
      if (auto tag = excluded(system, p, s->coefficients, t->coefficients)) {
        bool valid = false;
        for (NodeSet sp : rp.sp)
          valid = valid || !datum_violation(system, p, {s->coefficients, t->coefficients}, sp, std::nullopt);
        if (valid) report.items.push_back({system.name(), s->coefficients, t->coefficients, *tag, Verdict::Excluded});
        continue;
      }
      if (auto sp = admissible_pair(system, p, *s, *t, rp.sp)) found[{s->coefficients, t->coefficients}] = sp_label(*sp);
    }
  }
  reconcile(report, system.name(), found, instantiate(nested_support_families(), system, p, true));
  std::sort(report.items.begin(), report.items.end(), item_less);
  return report;
}

VerificationReport verify_dihedral_angles(const RootSystem& system, std::int64_t p, SuiteOptions opt) {
  auto report = make_report("dihedral-angles", system, p, opt.q_max);
  const auto shared = share(system);
  const auto pairs = admissible_pairs(system, p, opt, [](const SphericalRoot&, const SphericalRoot&) { return true; });
  std::vector<ReportItem> items(pairs.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& ap = pairs[k];
    ReportItem& item = items[k];
    item = {system.name(), ap.sigma, ap.tau, sp_label(ap.sp), Verdict::Expected};
    try {
      SphericalDatum d(shared, p, {ap.sigma, ap.tau}, ap.sp);
      for (const auto& a : dihedral_angles(valuation_cone(d), d)) {
        item.detail += "; angle " + to_string(a.angle) + " (cos^2 " + a.cos2.str() + ")";
        if (p != 2 && is_p2_only(a.angle)) {
          item.verdict = Verdict::Unexpected;
          item.detail += " only allowed for p=2";
        }
      }
    } catch (const std::exception& e) {
      item.verdict = Verdict::Unexpected;
      item.detail += std::string("; ") + e.what();
    }
  }
  report.items = std::move(items);
  std::sort(report.items.begin(), report.items.end(), item_less);
  return report;
}

VerificationReport verify_simple_systems(const RootSystem& system, std::int64_t p, SuiteOptions opt) {
  auto report = make_report("simple-systems", system, p, opt.q_max);
  const auto shared = share(system);
  std::vector<std::pair<std::vector<Coeffs>, NodeSet>> data;
  for (const auto& s : spherical_roots_of_G(system, p, opt.q_max))
    for (NodeSet sp : common_compatible_sp({&s}, system))
      if (!datum_violation(system, p, {s.coefficients}, sp, std::nullopt)) {
        data.push_back({{s.coefficients}, sp});
        break;
      }
  for (const auto& ap : admissible_pairs(system, p, opt, [](const SphericalRoot&, const SphericalRoot&) { return true; }))
    data.push_back({{ap.sigma, ap.tau}, ap.sp});

  std::vector<ReportItem> items(data.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& [sigma, sp] = data[k];
    ReportItem& item = items[k];
    item = {system.name(), sigma[0], sigma.size() > 1 ? sigma[1] : Coeffs{}, sp_label(sp), Verdict::Expected};
    try {
      SphericalDatum d(shared, p, sigma, sp);
      const bool independent = linearly_independent(d.sigma_vectors());
      const auto wx = generate_W_X(d);
      const auto dec = chamber_decomposition(valuation_cone(d), d, wx);
      item.detail += "; |W_X|=" + std::to_string(wx.order()) + "; chambers " + std::to_string(dec.chambers.size());
      if (!independent) item.detail += "; dependent";
      if (p != 2 && (!independent || dec.chambers.size() != 1 || !is_simple_system(d.sigma_vectors(), system)))
        item.verdict = Verdict::Unexpected;
    } catch (const std::exception& e) {
      item.verdict = Verdict::Unexpected;
      item.detail += std::string("; ") + e.what();
    }
  }
  report.items = std::move(items);
  std::sort(report.items.begin(), report.items.end(), item_less);
  return report;
}

VerificationReport verify_lift_lemma(std::int64_t p, int rank_bound, std::int64_t q_max) {
  VerificationReport report;
  report.claim = "lift-lemma";
  report.search_space = "table rows, rank <= " + std::to_string(rank_bound);
  report.p = p;
  report.q_max = q_max;
  for (const RootPattern* row : table_rows(p)) {
    for (int n = row->min_rank; n <= std::min(row->max_rank, rank_bound); ++n) {
      const auto diagram = row->support_diagram(n);
      if (diagram.rank() > rank_bound) continue;
      const auto system = std::make_shared<const RootSystem>(diagram);
      const std::vector<std::int64_t> qs = row->frobenius ? frobenius_parameters(p, q_max) : std::vector<std::int64_t>{1};
      for (std::int64_t q : qs) {
        const Coeffs sigma = row->coefficients_at(n, q);
        ReportItem item{system->name(), sigma, {}, row->id + (row->frobenius ? " q=" + std::to_string(q) : ""),
                        Verdict::Expected};
        try {
          SphericalDatum d(system, p, {sigma}, row->black_at(n));
          const auto& s = d.sigma()[0];
          const Lift lift = lift_n_sigma(s, d);
          const Vec v = d.sigma_vectors()[0];
          if (lift.element.matrix * v != scale(-1, v))
            throw VerificationError(row->id, "n_sigma(sigma) != -sigma");
          // the lemma's full range: the whole admissible subspace
          lift_n_sigma(s, *system, d.sp(), admissible_span(s, *system, d.sp()));
          item.detail += "; case " + std::to_string(lift.lemma_case);
          if (lift.lemma_case == 3 && system->weyl_order() <= 100000) {
            if (!system->very_orthogonal(lift.roots[0], lift.roots[1]))
              throw VerificationError(row->id, "decomposition roots are not very orthogonal");
            item.detail += ", very orthogonal";
          }
        } catch (const std::exception& e) {
          item.verdict = Verdict::Unexpected;
          item.detail += std::string("; ") + e.what();
        }
        report.items.push_back(std::move(item));
      }
    }
  }
  return report;
}

std::vector<std::string> search_space(int max_rank, bool with_e) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 3; n <= max_rank; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  if (max_rank >= 2) out.push_back("G2");
  if (max_rank >= 4) out.push_back("F4");
  if (with_e)
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back("E" + std::to_string(n));
  return out;
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::ObtusenessCombinatorial, Suite::Obtuseness, Suite::Nested, Suite::Angles,
                  Suite::SimpleSystems, Suite::Lifts})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::ObtusenessCombinatorial: return "obtuseness-combinatorial";
    case Suite::Obtuseness: return "obtuseness";
    case Suite::Nested: return "nested";
    case Suite::Angles: return "angles";
    case Suite::SimpleSystems: return "simple-systems";
    case Suite::Lifts: return "lifts";
  }
  return "?";
}

VerificationReport run_suite(Suite suite, std::int64_t p, int max_rank, bool with_e, SuiteOptions opt) {
  validate_characteristic(p);
  if (max_rank < 1 || max_rank > 8) throw ValidationError("max-rank must be between 1 and 8");
  if (suite == Suite::Lifts) return verify_lift_lemma(p, max_rank, opt.q_max);
  VerificationReport total;
  total.p = p;
  total.q_max = opt.q_max;
  const auto types = search_space(max_rank, with_e);
  for (std::size_t k = 0; k < types.size(); ++k) {
    const RootSystem system = RootSystem::parse(types[k]);
    VerificationReport r;
    switch (suite) {
      case Suite::ObtusenessCombinatorial: r = verify_obtuseness_combinatorial(system, p, opt); break;
      case Suite::Obtuseness: r = verify_obtuseness_theorem(system, p, opt); break;
      case Suite::Nested: r = verify_nested_support(system, p, opt); break;
      case Suite::Angles: r = verify_dihedral_angles(system, p, opt); break;
      case Suite::SimpleSystems: r = verify_simple_systems(system, p, opt); break;
      case Suite::Lifts: break;
    }
    total.claim = r.claim;
    total.search_space += (k ? ", " : "") + types[k];
    total.append(r);
  }
  return total;
}

}  // namespace sphroots
