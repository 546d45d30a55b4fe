#pragma once

// Machine-readable transcription of the table of cuspidal spherical
// varieties of rank one (groups of adjoint type), and matching of candidate
// spherical roots against it.
//
// Each row gives an abstract support diagram (a fixed type or a
// rank-parameterized family), the coefficients of the spherical root on
// that support, the black vertices (the S^P set) and the characteristic
// condition under which the row exists. Rank-parameterized rows store
// their coefficient and black-vertex rules as run-length segments; one
// segment per rule may be a "fill" segment absorbing the remaining nodes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphroots/dynkin.hpp"
#include "sphroots/rootsys.hpp"

namespace sphroots {

enum class PCondition { Any, NotTwo, Two, Three };

bool p_condition_holds(PCondition c, std::int64_t p);
std::string to_string(PCondition c);

// p must be 1 (characteristic zero) or a prime; throws ValidationError.
void validate_characteristic(std::int64_t p);

struct Segment {
  std::int64_t value;
  int length;  // kFill: absorbs whatever the fixed segments leave over
  static constexpr int kFill = -1;
};

std::vector<std::int64_t> expand_segments(const std::vector<Segment>& rule, int n);
std::string describe_segments(const std::vector<Segment>& rule);

// sigma = u alpha + v beta with alpha, beta orthogonal roots, written on
// the abstract support. Used to lift s_sigma to the Weyl group.
struct Decomposition {
  std::vector<Segment> alpha;
  std::vector<Segment> beta;
  Rational u;
  Rational v;
};

struct RootPattern {
  std::string id;
  char family;  // type letter of the support; 'X' for the disconnected A1xA1 family
  int min_rank;
  int max_rank;
  std::vector<Segment> coefficients;
  std::vector<Segment> black_dots;
  PCondition p_condition;
  bool frobenius = false;       // coefficient q = p^l sits on abstract node 1
  std::string doubled_from;     // non-empty for a [x2] variant: id of the base row
  std::string group_g;
  std::string group_h;
  std::string section;          // "all p", "additionally for p=2", ...
  std::optional<Decomposition> decomposition;

  bool admits_rank(int n) const { return n >= min_rank && n <= max_rank; }
  DynkinDiagram support_diagram(int n) const;
  // coefficient vector on the abstract support (q used only by the Frobenius family)
  std::vector<std::int64_t> coefficients_at(int n, std::int64_t q = 1) const;
  NodeSet black_at(int n) const;
  std::string support_label() const;  // "B_n (n>=2)", "A3", "A1xA1"
};

// Every row of the transcription, in table order.
const std::vector<RootPattern>& all_patterns();
const RootPattern& pattern_by_id(const std::string& id);

// Rows present in characteristic exponent p.
std::vector<const RootPattern*> table_rows(std::int64_t p);

// Powers of p not exceeding q_max (just {1} for p = 1).
std::vector<std::int64_t> frobenius_parameters(std::int64_t p, std::int64_t q_max);

struct PatternMatch {
  const RootPattern* pattern;
  std::vector<int> embedding;  // abstract node k -> concrete node
  NodeSet black;               // induced black dots, concrete nodes
  std::int64_t q = 1;          // Frobenius parameter (1 otherwise)
  std::int64_t rank = 0;       // instantiated family rank
};

// All ways the coefficient vector `sigma` (supported exactly on `support`)
// arises from a row of the table at characteristic p with q <= q_max.
// Matches with identical (row, q, induced black dots) are reported once.
std::vector<PatternMatch> pattern_match(const DynkinDiagram& diagram, NodeSet support, const Coeffs& sigma,
                                        std::int64_t p, std::int64_t q_max);

// Versioned JSON document of the transcription.
std::string table_json(std::int64_t p_filter = 0);  // 0: every row

}  // namespace sphroots
