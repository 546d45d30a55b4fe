#include "sphroots/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "sphroots/errors.hpp"

namespace sphroots {

void validate_component(Component c) {
  const auto bad = [&](const std::string& why) {
    throw ValidationError(std::string("invalid Dynkin component ") + c.letter + std::to_string(c.rank) + ": " + why);
  };
  if (c.rank <= 0) bad("rank must be positive");
  switch (c.letter) {
    case 'A': break;
    case 'B':
    case 'C':
      if (c.rank < 2) bad("rank must be at least 2");
      break;
    case 'D':
      if (c.rank < 4) bad("rank must be at least 4 (D3 is A3)");
      break;
    case 'E':
      if (c.rank < 6 || c.rank > 8) bad("rank must be 6, 7 or 8");
      break;
    case 'F':
      if (c.rank != 4) bad("only F4 exists");
      break;
    case 'G':
      if (c.rank != 2) bad("only G2 exists");
      break;
    default: bad("unknown type letter");
  }
  if (c.rank > 24) bad("rank too large");
}

std::vector<std::vector<int>> standard_cartan(Component c) {
  validate_component(c);
  const int n = c.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  // long -> short edge of multiplicity m: <long, short^vee> = -m
  auto arrow = [&](int long_node, int short_node, int m) {
    a[long_node][short_node] = -m;
    a[short_node][long_node] = -1;
  };
  switch (c.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      arrow(n - 2, n - 1, 2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      arrow(n - 1, n - 2, 2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      arrow(1, 2, 2);
      link(2, 3);
      break;
    case 'G': arrow(1, 0, 3); break;
  }
  return a;
}

DynkinDiagram::DynkinDiagram(std::vector<Component> components) : components_(std::move(components)) {
  int n = 0;
  for (const auto& c : components_) {
    validate_component(c);
    n += c.rank;
  }
  cartan_.assign(n, std::vector<int>(n, 0));
  int off = 0;
  for (const auto& c : components_) {
    const auto block = standard_cartan(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) cartan_[off + i][off + j] = block[i][j];
    off += c.rank;
  }
  index_components();
}

DynkinDiagram::DynkinDiagram(std::vector<Component> components, std::vector<std::vector<int>> cartan)
    : DynkinDiagram(std::move(components)) {
  if (cartan.size() != cartan_.size())
    throw ValidationError("Dynkin diagram: node count " + std::to_string(cartan.size()) +
                          " differs from the sum of component ranks " + std::to_string(cartan_.size()));
  for (const auto& row : cartan)
    if (row.size() != cartan.size()) throw ValidationError("Dynkin diagram: Cartan matrix is not square");
  if (cartan != cartan_)
    throw ValidationError("Dynkin diagram: edge data inconsistent with component types " + name());
}

void DynkinDiagram::index_components() {
  node_component_.clear();
  offsets_.clear();
  int off = 0;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    offsets_.push_back(off);
    for (int i = 0; i < components_[c].rank; ++i) node_component_.push_back(static_cast<int>(c));
    off += components_[c].rank;
  }
}

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
  std::vector<Component> comps;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == 'x' || text[i] == '*'))
      ++i;
  };
  skip();
  if (i == text.size()) throw ValidationError("empty Dynkin type string");
  while (i < text.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
      throw ValidationError("bad Dynkin type string '" + std::string(text) + "'");
    ++i;
    int r = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      r = r * 10 + (text[i] - '0');
      ++i;
      ++digits;
      if (r > 1000) throw ValidationError("rank too large in '" + std::string(text) + "'");
    }
    if (digits == 0) throw ValidationError("missing rank in '" + std::string(text) + "'");
    comps.push_back({letter, r});
    skip();
  }
  return DynkinDiagram(std::move(comps));
}

std::string DynkinDiagram::name() const {
  std::string s;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) s += "x";
    s += components_[c].letter + std::to_string(components_[c].rank);
  }
  return s;
}

int DynkinDiagram::parse_node_name(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'A'))
    throw ValidationError("bad node name '" + std::string(name) + "' (expected a1, a2, ...)");
  int v = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ValidationError("bad node name '" + std::string(name) + "'");
    v = v * 10 + (ch - '0');
    if (v > 1000) throw ValidationError("bad node name '" + std::string(name) + "'");
  }
  if (v < 1) throw ValidationError("bad node name '" + std::string(name) + "'");
  return v - 1;
}

NodeSet DynkinDiagram::neighbors(NodeSet s) const {
  NodeSet out;
  for (int i : s.elements())
    for (int j = 0; j < rank(); ++j)
      if (adjacent(i, j) && !s.contains(j)) out.insert(j);
  return out;
}

bool DynkinDiagram::connected(NodeSet s) const {
  if (s.empty()) return false;
  NodeSet reached = NodeSet::of({s.elements().front()});
  while (true) {
    const NodeSet next = reached | (neighbors(reached) & s);
    if (next == reached) break;
    reached = next;
  }
  return reached == s;
}

std::vector<std::vector<int>> diagram_embeddings(const DynkinDiagram& pattern, const DynkinDiagram& target,
                                                 NodeSet allowed, bool onto) {
  std::vector<std::vector<int>> out;
  const int k = pattern.rank();
  if (k > allowed.size() || (onto && k != allowed.size())) return out;
  const auto candidates = allowed.elements();
  std::vector<int> image(k, -1);
  NodeSet used;
  std::function<void(int)> extend = [&](int i) {
    if (i == k) {
      out.push_back(image);
      return;
    }
    for (int t : candidates) {
      if (used.contains(t)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = target.cartan(t, image[j]) == pattern.cartan(i, j) && target.cartan(image[j], t) == pattern.cartan(j, i);
      if (!ok) continue;
      image[i] = t;
      used.insert(t);
      extend(i + 1);
      used.erase(t);
    }
  };
  extend(0);
  return out;
}

namespace {

std::vector<Component> candidate_types(int r) {
  std::vector<Component> c{{'A', r}};
  if (r >= 2) c.push_back({'B', r});
  if (r >= 3) c.push_back({'C', r});
  if (r >= 4) c.push_back({'D', r});
  if (r >= 6 && r <= 8) c.push_back({'E', r});
  if (r == 4) c.push_back({'F', 4});
  if (r == 2) c.push_back({'G', 2});
  return c;
}

}  // namespace

std::vector<SubdiagramComponent> subdiagram_type(const DynkinDiagram& diagram, NodeSet subset) {
  std::vector<SubdiagramComponent> out;
  NodeSet remaining = subset;
  while (!remaining.empty()) {
    NodeSet comp = NodeSet::of({remaining.elements().front()});
    while (true) {
      const NodeSet next = comp | (diagram.neighbors(comp) & subset);
      if (next == comp) break;
      comp = next;
    }
    remaining = remaining - comp;
    bool found = false;
    for (const auto& type : candidate_types(comp.size())) {
      const auto emb = diagram_embeddings(DynkinDiagram({type}), diagram, comp, true);
      if (!emb.empty()) {
        out.push_back({type, emb.front()});
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("subdiagram_type: unclassifiable component in " + diagram.name());
  }
  return out;
}

}  // namespace sphroots
