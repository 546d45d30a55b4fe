#pragma once

// Exhaustive desk-scale checks of the combinatorial statements about
// pairs of spherical roots: obtuse pairs, nested supports, dihedral angles,
// simple systems and the lift lemma. Expected sets are parameterized
// families instantiated on every induced subdiagram of the ambient type.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphroots/enumerate.hpp"
#include "sphroots/table.hpp"

namespace sphroots {

enum class Verdict { Expected, Unexpected, Missing, Excluded };
std::string to_string(Verdict v);

struct ReportItem {
  std::string type;    // ambient Dynkin type
  Coeffs sigma;
  Coeffs tau;          // empty for single-root items
  std::string detail;  // S^P, family label, exclusion tag, failure message
  Verdict verdict = Verdict::Expected;
};

struct VerificationReport {
  std::string claim;
  std::string search_space;
  std::int64_t p = 1;
  std::int64_t q_max = 1;
  std::vector<ReportItem> items;

  std::size_t count(Verdict v) const;
  bool passed() const { return count(Verdict::Unexpected) == 0 && count(Verdict::Missing) == 0; }
  void append(const VerificationReport& other);
};

// A parameterized pair (sigma, tau) on X_n, n in [min_n, max_n].
struct FamilyPair {
  std::string label;
  char family;
  int min_n, max_n;
  PCondition condition;
  std::function<std::pair<Coeffs, Coeffs>(int)> make;
};

using PairKey = std::pair<Coeffs, Coeffs>;
PairKey unordered_key(const Coeffs& a, const Coeffs& b);

// Every image of the family pairs under induced-subdiagram embeddings into
// `system`, keyed by pair (unordered keys unless `ordered`), valued by label.
std::map<PairKey, std::string> instantiate(const std::vector<FamilyPair>& families, const RootSystem& system,
                                           std::int64_t p, bool ordered);

// Families: pairs with positive product that the table allows, obtuse pairs
// that actually occur, and the nested-support table.
const std::vector<FamilyPair>& positive_product_families();
const std::vector<FamilyPair>& obtuse_pair_families();
const std::vector<FamilyPair>& nested_support_families();

// Geometric exclusions with their justification tags. `ordered` entries
// apply to (sigma, tau) only, the rest to either order.
struct Exclusion {
  FamilyPair pair;
  bool ordered;
  std::string tag;
};
const std::vector<Exclusion>& exclusions();
// Tag of the exclusion hitting (sigma, tau), if any.
std::optional<std::string> excluded(const RootSystem& system, std::int64_t p, const Coeffs& sigma, const Coeffs& tau);

// Unordered pairs i < j of `roots` passing `prefilter` and having a common
// compatible S^P; sorted by (i, j). `parallel` uses OpenMP.
struct RootPair {
  std::size_t i, j;
  std::vector<NodeSet> sp;  // minimal common S^P sets
};
using PairFilter = std::function<bool(const SphericalRoot&, const SphericalRoot&)>;
std::vector<RootPair> scan_pairs(const RootSystem& system, const std::vector<SphericalRoot>& roots,
                                 const PairFilter& prefilter, bool parallel);

// lambda = a1^vee - q^-1 a2^vee vanishes on chi for some Frobenius match of
// sigma; true when sigma has connected support.
bool frobenius_compatible(const SphericalRoot& sigma, const Coeffs& chi, const RootSystem& system);

// Sigma = {sigma, tau} forms a valid datum for some minimal common S^P (the
// S^P set is returned) and is not geometrically excluded.
std::optional<NodeSet> admissible_pair(const RootSystem& system, std::int64_t p, const SphericalRoot& sigma,
                                       const SphericalRoot& tau, const std::vector<NodeSet>& common_sp);

struct SuiteOptions {
  std::int64_t q_max = 4;
  bool parallel = true;
};

VerificationReport verify_obtuseness_combinatorial(const RootSystem& system, std::int64_t p, SuiteOptions opt = {});
VerificationReport verify_obtuseness_theorem(const RootSystem& system, std::int64_t p, SuiteOptions opt = {});
VerificationReport verify_nested_support(const RootSystem& system, std::int64_t p, SuiteOptions opt = {});
// Angle labels of every admissible pair; p2-only labels for p != 2 fail.
VerificationReport verify_dihedral_angles(const RootSystem& system, std::int64_t p, SuiteOptions opt = {});
// For p != 2: admissible singletons and pairs are independent with one chamber.
VerificationReport verify_simple_systems(const RootSystem& system, std::int64_t p, SuiteOptions opt = {});
// Every table row at every rank <= rank_bound, rank-one lattice.
VerificationReport verify_lift_lemma(std::int64_t p, int rank_bound, std::int64_t q_max = 4);

// Connected types: A1..A_r, B2..B_r, C3..C_r, D4..D_r, G2, F4 (r >= 4),
// E6..E8 when `with_e` and r allows.
std::vector<std::string> search_space(int max_rank, bool with_e = false);

enum class Suite { ObtusenessCombinatorial, Obtuseness, Nested, Angles, SimpleSystems, Lifts };
std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite s);

// One suite over a whole search space, reports merged in type order.
VerificationReport run_suite(Suite suite, std::int64_t p, int max_rank, bool with_e, SuiteOptions opt = {});

}  // namespace sphroots
