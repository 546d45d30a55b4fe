#include "sphroots/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

// Bourbaki realization of one component in its own coordinate block.
struct Block {
  std::size_t dim;
  std::vector<Vec> simple;
  Rational scale;
};

Block realize_component(Component c) {
  const int n = c.rank;
  auto e = [](std::size_t dim, std::size_t i) { return unit_vec(dim, i); };
  Block b;
  b.scale = 1;
  switch (c.letter) {
    case 'A':
      b.dim = n + 1;
      for (int i = 0; i < n; ++i) b.simple.push_back(sub(e(b.dim, i), e(b.dim, i + 1)));
      break;
    case 'B':
    case 'C':
    case 'D':
      b.dim = n;
      for (int i = 0; i + 1 < n; ++i) b.simple.push_back(sub(e(b.dim, i), e(b.dim, i + 1)));
      if (c.letter == 'B') {
        b.simple.push_back(e(b.dim, n - 1));
        b.scale = 2;
      } else if (c.letter == 'C') {
        b.simple.push_back(scale(2, e(b.dim, n - 1)));
      } else {
        b.simple.push_back(add(e(b.dim, n - 2), e(b.dim, n - 1)));
      }
      break;
    case 'E': {
      b.dim = 8;
      const Rational h(1, 2);
      Vec a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      b.simple.push_back(a1);
      b.simple.push_back(add(e(8, 0), e(8, 1)));
      b.simple.push_back(sub(e(8, 1), e(8, 0)));
      for (int i = 3; i < n; ++i) b.simple.push_back(sub(e(8, i - 1), e(8, i - 2)));
      break;
    }
    case 'F': {
      b.dim = 4;
      b.scale = 2;
      b.simple.push_back(sub(e(4, 1), e(4, 2)));
      b.simple.push_back(sub(e(4, 2), e(4, 3)));
      b.simple.push_back(e(4, 3));
      const Rational h(1, 2);
      b.simple.push_back(Vec{h, -h, -h, -h});
      break;
    }
    case 'G':
      b.dim = 3;
      b.simple.push_back(sub(e(3, 0), e(3, 1)));
      b.simple.push_back(Vec{-2, 1, 1});
      break;
  }
  return b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

RootSystem::RootSystem(DynkinDiagram diagram) : RootSystem(std::move(diagram), {}) {}

RootSystem::RootSystem(DynkinDiagram diagram, std::vector<Rational> extra_scale) : diagram_(std::move(diagram)) {
  if (diagram_.rank() == 0) throw ValidationError("root system of rank 0");
  if (!extra_scale.empty() && extra_scale.size() != diagram_.components().size())
    throw ValidationError("one scale factor per component expected");
  for (const auto& s : extra_scale)
    if (s.sign() <= 0) throw ValidationError("scale factors must be positive");
  realize();
  if (!extra_scale.empty())
    for (std::size_t c = 0; c < scale_.size(); ++c) scale_[c] *= extra_scale[c];
  close_roots();
}

void RootSystem::realize() {
  std::vector<Block> blocks;
  for (const auto& c : diagram_.components()) {
    blocks.push_back(realize_component(c));
    dim_ += blocks.back().dim;
  }
  std::size_t off = 0;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    scale_.push_back(blocks[c].scale);
    for (std::size_t k = 0; k < blocks[c].dim; ++k) coord_component_.push_back(static_cast<int>(c));
    for (const auto& s : blocks[c].simple) {
      Vec v(dim_);
      for (std::size_t k = 0; k < s.size(); ++k) v[off + k] = s[k];
      simple_.push_back(std::move(v));
    }
    off += blocks[c].dim;
  }
}

Rational RootSystem::form(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("form: dimension mismatch");
  Rational s;
  for (std::size_t k = 0; k < dim_; ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += scale_[coord_component_[k]] * a[k] * b[k];
  return s;
}

Rational RootSystem::pairing(const Vec& chi, const Vec& alpha) const {
  const Rational n = norm2(alpha);
  if (n.is_zero()) throw ValidationError("pairing with the zero vector");
  return Rational(2) * form(chi, alpha) / n;
}

Vec RootSystem::coroot(const Vec& alpha) const {
  // the vector representing chi -> <chi, alpha^vee> under the plain dot
  // product: coordinates 2 scale_k alpha_k / (alpha, alpha)
  const Rational n = norm2(alpha);
  if (n.is_zero()) throw ValidationError("coroot of the zero vector");
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = Rational(2) * scale_[coord_component_[k]] * alpha[k] / n;
  return v;
}

Vec RootSystem::reflect(const Vec& chi, const Vec& alpha) const {
  return sub(chi, scale(pairing(chi, alpha), alpha));
}

WeylElement RootSystem::reflection(const Vec& alpha) const {
  if (is_zero(alpha)) throw ValidationError("reflection in the zero vector");
  WeylElement w{Matrix(dim_, dim_), {}};
  for (std::size_t c = 0; c < dim_; ++c) {
    const Vec img = reflect(unit_vec(dim_, c), alpha);
    for (std::size_t r = 0; r < dim_; ++r) w.matrix(r, c) = img[r];
  }
  if (auto idx = root_index(alpha)) {
    const auto& word = root_words_[*idx];
    w.word = word;
    w.word.push_back(root_base_[*idx]);
    w.word.insert(w.word.end(), word.rbegin(), word.rend());
  }
  return w;
}

WeylElement RootSystem::simple_reflection(int i) const { return reflection(simple_[i]); }

Vec RootSystem::from_coeffs(const Coeffs& c) const {
  if (static_cast<int>(c.size()) != rank()) throw ValidationError("coefficient vector has wrong length");
  Vec v(dim_);
  for (int i = 0; i < rank(); ++i)
    if (c[i] != 0) v = add(v, scale(Rational(c[i]), simple_[i]));
  return v;
}

Vec RootSystem::from_rational_coeffs(const Vec& c) const {
  if (static_cast<int>(c.size()) != rank()) throw ValidationError("coefficient vector has wrong length");
  Vec v(dim_);
  for (int i = 0; i < rank(); ++i)
    if (!c[i].is_zero()) v = add(v, scale(c[i], simple_[i]));
  return v;
}

std::optional<Vec> RootSystem::to_coeffs(const Vec& v) const { return coordinates(simple_, v); }

std::optional<std::size_t> RootSystem::root_index(const Vec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RootSystem::close_roots() {
  struct Entry {
    Vec v;
    Coeffs coeffs;
    std::vector<int> word;
    int base;
  };
  std::vector<Entry> found;
  std::unordered_map<Vec, std::size_t, VecHash> seen;
  std::deque<std::size_t> queue;
  for (int i = 0; i < rank(); ++i) {
    Coeffs c(rank(), 0);
    c[i] = 1;
    seen.emplace(simple_[i], found.size());
    queue.push_back(found.size());
    found.push_back({simple_[i], c, {}, i});
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      const Rational k = pairing(found[cur].v, simple_[i]);
      if (!k.is_integer()) throw VerificationError(name(), "non-integral root pairing");
      Vec img = sub(found[cur].v, scale(k, simple_[i]));
      if (seen.count(img)) continue;
      Coeffs c = found[cur].coeffs;
      c[i] -= k.num();
      std::vector<int> word{i};
      word.insert(word.end(), found[cur].word.begin(), found[cur].word.end());
      seen.emplace(img, found.size());
      queue.push_back(found.size());
      found.push_back({std::move(img), std::move(c), std::move(word), found[cur].base});
      if (found.size() > 100000) throw VerificationError(name(), "root closure does not terminate");
    }
  }
  auto positive = [](const Coeffs& c) { return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; }); };
  auto height = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool pa = positive(found[a].coeffs), pb = positive(found[b].coeffs);
    if (pa != pb) return pa;
    const auto ha = std::llabs(height(found[a].coeffs)), hb = std::llabs(height(found[b].coeffs));
    if (ha != hb) return ha < hb;
    return found[a].coeffs > found[b].coeffs;
  });
  for (std::size_t idx : order) {
    index_.emplace(found[idx].v, roots_.size());
    roots_.push_back(found[idx].v);
    root_coeffs_.push_back(found[idx].coeffs);
    root_words_.push_back(found[idx].word);
    root_base_.push_back(found[idx].base);
    if (positive(found[idx].coeffs)) ++positive_count_;
  }
}

std::vector<std::vector<int>> RootSystem::recovered_cartan() const {
  std::vector<std::vector<int>> a(rank(), std::vector<int>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      const Rational v = pairing(simple_[i], simple_[j]);
      if (!v.is_integer()) throw VerificationError(name(), "non-integral Cartan entry");
      a[i][j] = static_cast<int>(v.num());
    }
  return a;
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t order = 1;
  for (const auto& c : diagram_.components()) {
    std::uint64_t w = 1;
    switch (c.letter) {
      case 'A': w = factorial(c.rank + 1); break;
      case 'B':
      case 'C': w = (std::uint64_t{1} << c.rank) * factorial(c.rank); break;
      case 'D': w = (std::uint64_t{1} << (c.rank - 1)) * factorial(c.rank); break;
      case 'E': w = c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600; break;
      case 'F': w = 1152; break;
      case 'G': w = 12; break;
    }
    order *= w;
  }
  return order;
}

std::vector<WeylElement> RootSystem::weyl_group(std::uint64_t budget) const {
  if (rank() > 8) throw ValidationError("Weyl group materialization is limited to rank <= 8");
  if (weyl_order() > budget)
    throw ValidationError("Weyl group of " + name() + " has order " + std::to_string(weyl_order()) +
                          ", above the element budget " + std::to_string(budget));
  std::vector<WeylElement> gens;
  for (int i = 0; i < rank(); ++i) gens.push_back(WeylElement{simple_reflection(i).matrix, {i}});
  std::vector<WeylElement> elems{WeylElement{Matrix::identity(dim_), {}}};
  std::unordered_set<Matrix, MatrixHash> seen{elems.front().matrix};
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (const auto& g : gens) {
      Matrix m = g.matrix * elems[cur].matrix;
      if (!seen.insert(m).second) continue;
      std::vector<int> word{g.word.front()};
      word.insert(word.end(), elems[cur].word.begin(), elems[cur].word.end());
      elems.push_back(WeylElement{std::move(m), std::move(word)});
    }
  }
  return elems;
}

bool RootSystem::very_orthogonal(const Vec& alpha, const Vec& beta) const {
  if (!form(alpha, beta).is_zero()) return false;
  const auto ia = root_index(alpha), ib = root_index(beta);
  if (!ia || !ib) return false;
  // orbit of the pair under W, one simple reflection at a time
  std::set<std::pair<std::size_t, std::size_t>> seen{{*ia, *ib}};
  std::deque<std::pair<std::size_t, std::size_t>> queue{{*ia, *ib}};
  auto is_simple = [&](std::size_t idx) {
    return std::find(simple_.begin(), simple_.end(), roots_[idx]) != simple_.end();
  };
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    if (is_simple(a) && is_simple(b)) return true;
    for (int i = 0; i < rank(); ++i) {
      const auto na = *root_index(reflect(roots_[a], simple_[i]));
      const auto nb = *root_index(reflect(roots_[b], simple_[i]));
      if (seen.insert({na, nb}).second) queue.push_back({na, nb});
    }
  }
  return false;
}

}  // namespace sphroots
