#pragma once

// Dynkin diagrams of finite (crystallographic) type, stored through their
// Cartan matrices, plus the induced-subdiagram machinery used to match
// table patterns: component classification and diagram embeddings.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sphroots {

// Subset of diagram nodes as a bitmask (node i <-> bit i). Ranks are
// capped well below 32.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int n : nodes) s.insert(n);
    return s;
  }
  static constexpr NodeSet all(int n) { return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  void insert(int i) { bits_ |= 1u << i; }
  void erase(int i) { bits_ &= ~(1u << i); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  // set difference
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct Component {
  char letter;  // one of A B C D E F G
  int rank;
  friend bool operator==(const Component&, const Component&) = default;
};

// Standard Cartan matrix of one simple type, Bourbaki numbering, with
// entry (i, j) = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> standard_cartan(Component c);

// Validate a (letter, rank) pair; throws ValidationError.
void validate_component(Component c);

class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  // Block-diagonal diagram from the standard components.
  explicit DynkinDiagram(std::vector<Component> components);
  // Explicit Cartan data; validated against the component letters.
  DynkinDiagram(std::vector<Component> components, std::vector<std::vector<int>> cartan);

  // "A3", "B2xG2", "A1xA1" (also accepts '*' or ' x ' separators).
  static DynkinDiagram parse(std::string_view text);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::vector<Component>& components() const { return components_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
  // number of edges between i and j (0..3)
  int bond(int i, int j) const { return i == j ? 0 : cartan_[i][j] * cartan_[j][i]; }
  int component_of(int node) const { return node_component_[node]; }
  // first node of component c
  int offset(int c) const { return offsets_[c]; }

  std::string name() const;
  static std::string node_name(int i) { return "a" + std::to_string(i + 1); }
  static int parse_node_name(std::string_view name);  // "a3" -> 2

  // Nodes adjacent to some node of `s`, outside `s`.
  NodeSet neighbors(NodeSet s) const;
  bool connected(NodeSet s) const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) { return a.cartan_ == b.cartan_; }

 private:
  void index_components();

  std::vector<Component> components_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> node_component_;
  std::vector<int> offsets_;
};

// All injective maps f: pattern nodes -> target nodes inside `allowed` with
// cartan_target(f(i), f(j)) == cartan_pattern(i, j) for all i != j, i.e.
// isomorphisms of `pattern` onto induced subdiagrams of `target` (edge
// multiplicities and arrow directions preserved). With `onto`, the image
// must be all of `allowed`. Results come in lexicographic order.
std::vector<std::vector<int>> diagram_embeddings(const DynkinDiagram& pattern, const DynkinDiagram& target,
                                                 NodeSet allowed, bool onto);

struct SubdiagramComponent {
  Component type;
  // embedding[k] = concrete node playing the role of Bourbaki node k+1
  std::vector<int> embedding;
};

// Connected components of the induced subdiagram on `subset`, each
// classified by type and with an explicit Bourbaki-position map. Ordered
// by smallest concrete node.
std::vector<SubdiagramComponent> subdiagram_type(const DynkinDiagram& diagram, NodeSet subset);

}  // namespace sphroots
