#include "sphroots/table.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

constexpr int kFill = Segment::kFill;
constexpr int kNoMax = 24;

using Rule = std::vector<Segment>;

RootPattern row(std::string id, char family, int min_rank, int max_rank, Rule coeffs, Rule black, PCondition pc,
                std::string g, std::string h, std::string section) {
  RootPattern r;
  r.id = std::move(id);
  r.family = family;
  r.min_rank = min_rank;
  r.max_rank = max_rank;
  r.coefficients = std::move(coeffs);
  r.black_dots = std::move(black);
  r.p_condition = pc;
  r.group_g = std::move(g);
  r.group_h = std::move(h);
  r.section = std::move(section);
  return r;
}

// [x2] variant: same support and black dots, coefficients doubled
RootPattern doubled(const RootPattern& base) {
  RootPattern r = base;
  r.id = base.id + "x2";
  for (auto& s : r.coefficients) s.value *= 2;
  r.p_condition = base.p_condition == PCondition::Three ? PCondition::Three : PCondition::NotTwo;
  r.doubled_from = base.id;
  r.group_h = base.group_h + " [x2]";
  return r;
}

Decomposition decomposition(Rule alpha, Rule beta, Rational u = 1, Rational v = 1) {
  return Decomposition{std::move(alpha), std::move(beta), u, v};
}

std::vector<RootPattern> build_table() {
  const std::string all = "all p";
  const std::string two = "additionally for p=2";
  const std::string three = "additionally for p=3";
  std::vector<RootPattern> t;
  auto add = [&](RootPattern r, bool with_double = false) {
    t.push_back(r);
    if (with_double) t.push_back(doubled(r));
  };

  add(row("A1", 'A', 1, 1, {{1, 1}}, {{0, 1}}, PCondition::Any, "PGL(2)", "<s_a1>.GL(1)", all), true);
  add(row("An", 'A', 2, kNoMax, {{1, kFill}}, {{0, 1}, {1, kFill}, {0, 1}}, PCondition::Any, "PGL(n+1)", "GL(n)",
          all));
  {
    auto r = row("A3", 'A', 3, 3, {{1, 1}, {2, 1}, {1, 1}}, {{1, 1}, {0, 1}, {1, 1}}, PCondition::Any, "PGL(4)",
                 "PSp(4)", all);
    r.decomposition = decomposition({{1, 2}, {0, 1}}, {{0, 1}, {1, 2}});
    add(r);
  }
  add(row("Bn", 'B', 2, kNoMax, {{1, kFill}}, {{0, 1}, {1, kFill}}, PCondition::Any, "SO(2n+1)",
          "<s_an>.SO(2n)", all),
      true);
  add(row("Bn.P", 'B', 2, kNoMax, {{1, kFill}}, {{0, 1}, {1, kFill}, {0, 1}}, PCondition::Any, "SO(2n+1)",
          "P_n(SO(2n))", all));
  {
    auto r = row("B3", 'B', 3, 3, {{1, 1}, {2, 1}, {3, 1}}, {{1, 2}, {0, 1}}, PCondition::Any, "SO(7)", "G2", all);
    r.decomposition = decomposition({{1, 2}, {2, 1}}, {{0, 1}, {1, 2}});
    add(r);
  }
  add(row("Cn", 'C', 3, kNoMax, {{1, 1}, {2, kFill}, {1, 1}}, {{1, 1}, {0, 1}, {1, kFill}}, PCondition::Any,
          "PSp(2n)", "Sp(2).Sp(2n-2)", all));
  add(row("Cn.P", 'C', 3, kNoMax, {{1, 1}, {2, kFill}, {1, 1}}, {{0, 2}, {1, kFill}}, PCondition::Any, "PSp(2n)",
          "P_1(Sp(2)).Sp(2n-2)", all));
  {
    auto r = row("Dn", 'D', 4, kNoMax, {{2, kFill}, {1, 2}}, {{0, 1}, {1, kFill}}, PCondition::Any, "PSO(2n)",
                 "SO(2n-1)", all);
    r.decomposition = decomposition({{1, kFill}, {0, 1}}, {{1, kFill}, {0, 1}, {1, 1}});
    add(r);
  }
  add(row("F4", 'F', 4, 4, {{1, 1}, {2, 1}, {3, 1}, {2, 1}}, {{1, 3}, {0, 1}}, PCondition::Any, "F4", "Spin(9)",
          all));
  add(row("G2", 'G', 2, 2, {{2, 1}, {1, 1}}, {{0, 1}, {1, 1}}, PCondition::Any, "G2", "<s_a1>.SL(3)", all), true);
  add(row("G2.U", 'G', 2, 2, {{1, 2}}, {{0, 2}}, PCondition::Any, "G2", "GL(2)_long.U_{2a1+a2}U_{3a1+a2}U_{3a1+2a2}",
          all));
  {
    auto r = row("A1xA1.Fq", 'X', 2, 2, {{1, 2}}, {{0, 2}}, PCondition::Any, "PGL(2)xPGL(2)", "(id x F_q)PGL(2)", all);
    r.frobenius = true;
    add(r);
  }

  add(row("Bn.2", 'B', 3, kNoMax, {{1, 1}, {2, kFill}}, {{1, 1}, {0, 1}, {1, kFill}}, PCondition::Two, "SO(2n+1)",
          "SO(3)xSO(2n-1)", two));
  add(row("Bn.2P", 'B', 3, kNoMax, {{1, 1}, {2, kFill}}, {{0, 2}, {1, kFill}}, PCondition::Two, "SO(2n+1)",
          "P_1(SO(3))xSO(2n-1)", two));
  add(row("Cn.2", 'C', 2, kNoMax, {{2, kFill}, {1, 1}}, {{0, 1}, {1, kFill}}, PCondition::Two, "PSp(2n)",
          "<s_an>.PSO(2n)", two));
  add(row("Cn.2P", 'C', 2, kNoMax, {{2, kFill}, {1, 1}}, {{0, 1}, {1, kFill}, {0, 1}}, PCondition::Two, "PSp(2n)",
          "P_n(PSO(2n))", two));
  {
    auto r = row("C3.2", 'C', 3, 3, {{2, 1}, {4, 1}, {3, 1}}, {{1, 2}, {0, 1}}, PCondition::Two, "PSp(6)", "G2", two);
    r.decomposition = decomposition({{1, 3}}, {{0, 1}, {2, 1}, {1, 1}}, 2, 1);
    add(r);
  }
  add(row("F4.2", 'F', 4, 4, {{2, 1}, {3, 1}, {4, 1}, {2, 1}}, {{0, 1}, {1, 3}}, PCondition::Two, "F4", "Sp(8)",
          two));

  add(row("G2.3", 'G', 2, 2, {{3, 1}, {2, 1}}, {{1, 1}, {0, 1}}, PCondition::Three, "G2", "<s_a2>.SL(3)_short",
          three),
      true);
  add(row("G2.3U", 'G', 2, 2, {{3, 1}, {1, 1}}, {{0, 2}}, PCondition::Three, "G2",
          "GL(2)_short.U_{a1+a2}U_{2a1+a2}U_{3a1+2a2}", three));
  return t;
}

}  // namespace

bool p_condition_holds(PCondition c, std::int64_t p) {
  switch (c) {
    case PCondition::Any: return true;
    case PCondition::NotTwo: return p != 2;
    case PCondition::Two: return p == 2;
    case PCondition::Three: return p == 3;
  }
  return false;
}

std::string to_string(PCondition c) {
  switch (c) {
    case PCondition::Any: return "all p";
    case PCondition::NotTwo: return "p!=2";
    case PCondition::Two: return "p=2";
    case PCondition::Three: return "p=3";
  }
  return "?";
}

void validate_characteristic(std::int64_t p) {
  if (p == 1) return;
  bool prime = p >= 2;
  for (std::int64_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw ValidationError("characteristic exponent must be 1 or a prime, got " + std::to_string(p));
}

std::vector<std::int64_t> expand_segments(const std::vector<Segment>& rule, int n) {
  int fixed = 0, fills = 0;
  for (const auto& s : rule) (s.length == kFill ? fills : fixed) += s.length == kFill ? 1 : s.length;
  if (fills > 1) throw std::logic_error("segment rule with more than one fill segment");
  const int fill_len = n - fixed;
  if (fill_len < 0 || (fills == 0 && fill_len != 0))
    throw ValidationError("segment rule does not fit rank " + std::to_string(n));
  std::vector<std::int64_t> out;
  for (const auto& s : rule) out.insert(out.end(), s.length == kFill ? fill_len : s.length, s.value);
  return out;
}

std::string describe_segments(const std::vector<Segment>& rule) {
  std::string s;
  for (const auto& seg : rule) {
    if (!s.empty()) s += ",";
    s += std::to_string(seg.value);
    if (seg.length == kFill)
      s += "*";
    else if (seg.length > 1)
      s += "x" + std::to_string(seg.length);
  }
  return s;
}

DynkinDiagram RootPattern::support_diagram(int n) const {
  if (!admits_rank(n)) throw ValidationError("row " + id + " has no instance of rank " + std::to_string(n));
  if (family == 'X') return DynkinDiagram({{'A', 1}, {'A', 1}});
  return DynkinDiagram({{family, n}});
}

std::vector<std::int64_t> RootPattern::coefficients_at(int n, std::int64_t q) const {
  if (!admits_rank(n)) throw ValidationError("row " + id + " has no instance of rank " + std::to_string(n));
  auto c = expand_segments(coefficients, n);
  if (frobenius) c[0] = q;
  return c;
}

NodeSet RootPattern::black_at(int n) const {
  const auto b = expand_segments(black_dots, n);
  NodeSet s;
  for (int k = 0; k < n; ++k)
    if (b[k]) s.insert(k);
  return s;
}

std::string RootPattern::support_label() const {
  if (family == 'X') return "A1xA1";
  if (min_rank == max_rank) return std::string(1, family) + std::to_string(min_rank);
  return std::string(1, family) + "_n (n>=" + std::to_string(min_rank) + ")";
}

const std::vector<RootPattern>& all_patterns() {
  static const std::vector<RootPattern> table = build_table();
  return table;
}

const RootPattern& pattern_by_id(const std::string& id) {
  for (const auto& r : all_patterns())
    if (r.id == id) return r;
  throw ValidationError("no table row with id '" + id + "'");
}

std::vector<const RootPattern*> table_rows(std::int64_t p) {
  validate_characteristic(p);
  std::vector<const RootPattern*> out;
  for (const auto& r : all_patterns())
    if (p_condition_holds(r.p_condition, p)) out.push_back(&r);
  return out;
}

std::vector<std::int64_t> frobenius_parameters(std::int64_t p, std::int64_t q_max) {
  validate_characteristic(p);
  if (q_max < 1) throw ValidationError("q_max must be at least 1");
  std::vector<std::int64_t> qs{1};
  if (p == 1) return qs;
  for (std::int64_t q = p; q <= q_max; q *= p) {
    qs.push_back(q);
    if (q > q_max / p) break;
  }
  return qs;
}

std::vector<PatternMatch> pattern_match(const DynkinDiagram& diagram, NodeSet support, const Coeffs& sigma,
                                        std::int64_t p, std::int64_t q_max) {
  if (q_max < 1) throw ValidationError("q_max must be at least 1");
  if (static_cast<int>(sigma.size()) != diagram.rank())
    throw ValidationError("coefficient vector length " + std::to_string(sigma.size()) + " does not match rank " +
                          std::to_string(diagram.rank()));
  if (support.empty()) throw ValidationError("empty support");
  for (int i = 0; i < diagram.rank(); ++i) {
    if (support.contains(i) && sigma[i] <= 0)
      throw ValidationError("coefficient of " + DynkinDiagram::node_name(i) + " must be positive on the support");
    if (!support.contains(i) && sigma[i] != 0)
      throw ValidationError("coefficient of " + DynkinDiagram::node_name(i) + " is nonzero outside the support");
  }
  const auto qs = frobenius_parameters(p, q_max);
  const int n = support.size();
  std::vector<PatternMatch> out;
  std::set<std::tuple<std::string, std::int64_t, std::uint32_t>> seen;
  for (const RootPattern* r : table_rows(p)) {
    if (!r->admits_rank(n)) continue;
    const auto black = r->black_at(n);
    for (const auto& emb : diagram_embeddings(r->support_diagram(n), diagram, support, true)) {
      std::int64_t q = 1;
      if (r->frobenius) {
        q = sigma[emb[0]];
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) continue;
      }
      const auto c = r->coefficients_at(n, q);
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) ok = sigma[emb[k]] == c[k];
      if (!ok) continue;
      NodeSet induced;
      for (int k : black.elements()) induced.insert(emb[k]);
      if (!seen.insert({r->id, q, induced.bits()}).second) continue;
      out.push_back(PatternMatch{r, emb, induced, q, n});
    }
  }
  return out;
}

std::string table_json(std::int64_t p_filter) {
  using nlohmann::ordered_json;
  auto segments = [](const std::vector<Segment>& rule) {
    ordered_json a = ordered_json::array();
    for (const auto& s : rule)
      a.push_back({{"value", s.value}, {"length", s.length == kFill ? ordered_json("fill") : ordered_json(s.length)}});
    return a;
  };
  ordered_json rows = ordered_json::array();
  const auto selected = p_filter == 0 ? [] {
    std::vector<const RootPattern*> v;
    for (const auto& r : all_patterns()) v.push_back(&r);
    return v;
  }()
                                      : table_rows(p_filter);
  for (const RootPattern* r : selected) {
    ordered_json j;
    j["id"] = r->id;
    j["support"] = r->support_label();
    j["family"] = std::string(1, r->family);
    j["min_rank"] = r->min_rank;
    j["max_rank"] = r->max_rank == kNoMax ? ordered_json(nullptr) : ordered_json(r->max_rank);
    j["coefficients"] = segments(r->coefficients);
    j["coefficient_rule"] = r->frobenius ? "q,1" : describe_segments(r->coefficients);
    j["black_dots"] = segments(r->black_dots);
    j["black_rule"] = describe_segments(r->black_dots);
    j["p_condition"] = to_string(r->p_condition);
    j["frobenius"] = r->frobenius;
    j["doubled_from"] = r->doubled_from.empty() ? ordered_json(nullptr) : ordered_json(r->doubled_from);
    j["G"] = r->group_g;
    j["H"] = r->group_h;
    j["citation"] = "rank-one cuspidal table, " + r->section + ", row G=" + r->group_g + ", H=" + r->group_h;
    if (r->decomposition) {
      j["decomposition"] = {{"alpha", segments(r->decomposition->alpha)},
                            {"beta", segments(r->decomposition->beta)},
                            {"u", r->decomposition->u.fraction()},
                            {"v", r->decomposition->v.fraction()}};
    }
    ordered_json example;
    example["rank"] = r->min_rank;
    example["coefficients"] = r->coefficients_at(r->min_rank);
    std::vector<int> black;
    for (int k : r->black_at(r->min_rank).elements()) black.push_back(k + 1);
    example["black_nodes"] = black;
    j["example"] = example;
    rows.push_back(std::move(j));
  }
  ordered_json doc;
  doc["format"] = "sphroots-table";
  doc["version"] = 1;
  doc["p_filter"] = p_filter == 0 ? ordered_json(nullptr) : ordered_json(p_filter);
  doc["rows"] = std::move(rows);
  return doc.dump(2);
}

}  // namespace sphroots
