#include "sphroots/cone.hpp"

#include <algorithm>
#include <set>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

std::vector<Vec> with_rows(std::vector<Vec> rows, const std::vector<Vec>& extra) {
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t dim) {
  if (rows.empty()) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vec(dim, i));
    return basis;
  }
  return nullspace(Matrix::from_rows(rows));
}

bool all_nonpositive(const std::vector<Vec>& normals, const Vec& v) {
  return std::all_of(normals.begin(), normals.end(), [&](const Vec& n) { return dot(n, v).sign() <= 0; });
}

// calls f on every k-subset of {0..n-1}, lexicographically
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool positively_proportional(const Vec& a, const Vec& b) { return primitive_ray(a) == primitive_ray(b); }

Vec in_ambient(const Lattice& lat, const Vec& coords, std::size_t dim) {
  Vec x = zero_vec(dim);
  for (std::size_t i = 0; i < coords.size(); ++i) x = add(x, scale(coords[i], lat.basis()[i]));
  return x;
}

std::string sigma_name(const SphericalDatum& d, std::size_t i) { return format_coeffs(d.sigma()[i].coefficients); }

}  // namespace

std::size_t Cone::dimension() const { return rank_of(with_rows(lineality, extremal_rays)); }

bool Cone::contains(const Vec& v) const { return all_nonpositive(facet_normals, v); }

bool Cone::interior_contains(const Vec& v) const {
  return std::all_of(facet_normals.begin(), facet_normals.end(), [&](const Vec& n) { return dot(n, v).sign() < 0; });
}

std::size_t Cone::face_dimension(const std::vector<std::size_t>& tight) const {
  std::vector<Vec> gens = lineality;
  for (const Vec& r : extremal_rays) {
    if (std::all_of(tight.begin(), tight.end(), [&](std::size_t i) { return dot(facet_normals[i], r).is_zero(); }))
      gens.push_back(r);
  }
  return rank_of(gens);
}

Cone cone_from_normals(std::vector<Vec> normals, std::size_t dim) {
  Cone c;
  c.dim = dim;
  for (const Vec& n : normals)
    if (n.size() != dim) throw ValidationError("cone normal has wrong dimension");
  c.facet_normals = std::move(normals);
  c.lineality = kernel(c.facet_normals, dim);
  const std::size_t d = dim - c.lineality.size();
  if (d == 0) return c;

  // A ray of the pointed part is cut out, inside the complement of the
  // lineality, by d-1 independent tight normals.
  std::set<Vec> rays;
  for_each_subset(c.facet_normals.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> rows = c.lineality;
    for (std::size_t i : idx) rows.push_back(c.facet_normals[i]);
    auto k = kernel(rows, dim);
    if (k.size() != 1) return;
    if (all_nonpositive(c.facet_normals, k[0]))
      rays.insert(primitive_ray(k[0]));
    else if (const Vec neg = scale(-1, k[0]); all_nonpositive(c.facet_normals, neg))
      rays.insert(primitive_ray(neg));
  });
  c.extremal_rays.assign(rays.begin(), rays.end());
  return c;
}

std::vector<Vec> facets_of_generated(const std::vector<Vec>& generators, const std::vector<Vec>& lineality,
                                     std::size_t dim) {
  std::vector<Vec> polar = generators;
  for (const Vec& l : lineality) {
    polar.push_back(l);
    polar.push_back(scale(-1, l));
  }
  Cone p = cone_from_normals(polar, dim);
  std::set<Vec> out(p.extremal_rays.begin(), p.extremal_rays.end());
  for (const Vec& l : p.lineality) {
    out.insert(primitive_ray(l));
    out.insert(primitive_ray(scale(-1, l)));
  }
  return {out.begin(), out.end()};
}

Cone valuation_cone(const SphericalDatum& datum) {
  const Lattice& lat = datum.lattice();
  std::vector<Vec> normals;
  for (const Vec& s : datum.sigma_vectors()) normals.push_back(*lat.coords(s));
  Cone c = cone_from_normals(normals, lat.rank());
  if (c.dimension() != lat.rank()) throw VerificationError("valuation cone", "not full-dimensional");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (positively_proportional(normals[i], normals[j]))
        throw VerificationError(sigma_name(datum, i), "redundant facet normal (proportional to " +
                                                          sigma_name(datum, j) + ")");
    if (c.face_dimension({i}) + 1 != lat.rank())
      throw VerificationError(sigma_name(datum, i), "does not cut out a facet of the valuation cone");
  }
  return c;
}

Vec dual_to_ambient(const SphericalDatum& datum, const Vec& v) {
  const auto& b = datum.lattice().basis();
  const auto& sys = datum.system();
  Matrix gram(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) gram(i, j) = sys.form(b[i], b[j]);
  return in_ambient(datum.lattice(), *inverse(gram) * v, sys.dim());
}

ChamberDecomposition chamber_decomposition(const Cone& cone, const SphericalDatum& datum,
                                           const LittleWeylGroup& wx) {
  const Lattice& lat = datum.lattice();
  const std::size_t r = lat.rank();

  // reflecting hyperplanes of W_X, one primitive normal per hyperplane
  std::set<Vec> rays;
  for (const Vec& b : build_R_X(datum, wx)) {
    const Vec c = primitive_ray(*lat.coords(b));
    if (!rays.count(primitive_ray(scale(-1, c)))) rays.insert(c);
  }
  for (std::size_t i = 0; i < cone.facet_normals.size(); ++i) {
    const Vec n = primitive_ray(cone.facet_normals[i]);
    if (!rays.count(n) && !rays.count(primitive_ray(scale(-1, n))))
      throw VerificationError(sigma_name(datum, i), "facet hyperplane is not a reflecting hyperplane of W_X");
  }

  // generic point (1, k, k^2, ...) off every hyperplane
  Vec v0;
  for (std::int64_t k = 2;; ++k) {
    if (k > 10000) throw VerificationError("chambers", "no generic point found");
    v0.assign(r, Rational(0));
    Rational x(1);
    for (std::size_t i = 0; i < r; ++i, x *= k) v0[i] = x;
    if (std::none_of(rays.begin(), rays.end(), [&](const Vec& c) { return dot(c, v0).is_zero(); })) break;
  }
  std::vector<Vec> positive;
  for (const Vec& c : rays) positive.push_back(dot(c, v0).sign() > 0 ? c : scale(-1, c));

  // simple roots: s_b permutes the other positive hyperplane normals
  std::vector<Vec> simple;
  for (const Vec& b : positive) {
    const Matrix s = s_sigma(datum.system(), in_ambient(lat, b, datum.system().dim()), lat);
    bool ok = true;
    for (const Vec& c : positive) {
      if (c == b) continue;
      if (dot(s * c, v0).sign() < 0) {
        ok = false;
        break;
      }
    }
    if (ok) simple.push_back(b);
  }

  ChamberDecomposition out;
  out.total_chambers = wx.order();
  std::set<std::vector<int>> signs;
  for (std::size_t e = 0; e < wx.order(); ++e) {
    const Matrix& m = wx.elements[e];
    const Vec p = *inverse(m.transpose()) * v0;
    std::vector<int> sv;
    for (const Vec& c : positive) sv.push_back(dot(c, p).sign());
    if (!signs.insert(sv).second) throw VerificationError("chambers", "two elements of W_X give the same chamber");
    if (!cone.interior_contains(p)) {
      if (cone.contains(p)) throw VerificationError("chambers", "chamber point on the cone boundary");
      continue;
    }
    Chamber ch;
    ch.element = e;
    ch.interior_point = p;
    for (const Vec& a : simple) ch.walls.push_back(scale(-1, m * a));
    Cone cc = cone_from_normals(ch.walls, r);
    for (const Vec& ray : cc.extremal_rays)
      if (!cone.contains(ray)) throw VerificationError("chambers", "chamber sticks out of the valuation cone");
    for (const Vec& l : cc.lineality)
      if (!cone.contains(l) || !cone.contains(scale(-1, l)))
        throw VerificationError("chambers", "chamber lineality leaves the valuation cone");
    ch.extremal_rays = cc.extremal_rays;
    out.chambers.push_back(std::move(ch));
  }
  if (out.chambers.empty()) throw VerificationError("chambers", "valuation cone contains no chamber");
  return out;
}

bool is_simple_system(const std::vector<Vec>& sigma, const RootSystem& system) {
  if (!linearly_independent(sigma)) return false;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (system.form(sigma[i], sigma[j]).sign() > 0) return false;
  return true;
}

std::string to_string(Angle a) {
  switch (a) {
    case Angle::Pi6: return "pi/6";
    case Angle::Pi4: return "pi/4";
    case Angle::Pi3: return "pi/3";
    case Angle::Pi2: return "pi/2";
    case Angle::TwoPi3: return "2pi/3";
    case Angle::ThreePi4: return "3pi/4";
    case Angle::FivePi6: return "5pi/6";
  }
  return "?";
}

bool is_p2_only(Angle a) { return a == Angle::TwoPi3 || a == Angle::ThreePi4 || a == Angle::FivePi6; }

Angle classify_angle(const Rational& product, const Rational& norm2_a, const Rational& norm2_b) {
  const Rational cos2 = product * product / (norm2_a * norm2_b);
  const int s = product.sign();
  if (s == 0) return Angle::Pi2;
  // internal angle = pi - angle between the normals
  if (cos2 == Rational(1, 4)) return s < 0 ? Angle::Pi3 : Angle::TwoPi3;
  if (cos2 == Rational(1, 2)) return s < 0 ? Angle::Pi4 : Angle::ThreePi4;
  if (cos2 == Rational(3, 4)) return s < 0 ? Angle::Pi6 : Angle::FivePi6;
  throw VerificationError("dihedral angle", "cos^2 = " + cos2.str() + " is not admissible");
}

std::vector<DihedralAngle> dihedral_angles(const Cone& cone, const SphericalDatum& datum) {
  const auto& sv = datum.sigma_vectors();
  const auto& sys = datum.system();
  std::vector<DihedralAngle> out;
  if (cone.facet_normals.size() < 2 || cone.dimension() != cone.dim) return out;
  for (std::size_t i = 0; i < sv.size(); ++i)
    for (std::size_t j = i + 1; j < sv.size(); ++j) {
      if (cone.face_dimension({i, j}) + 2 != cone.dim) continue;
      const Rational prod = sys.form(sv[i], sv[j]);
      DihedralAngle a{i, j, prod * prod / (sys.norm2(sv[i]) * sys.norm2(sv[j])), prod.sign(), Angle::Pi2};
      try {
        a.angle = classify_angle(prod, sys.norm2(sv[i]), sys.norm2(sv[j]));
      } catch (const VerificationError& e) {
        throw VerificationError(sigma_name(datum, i) + " / " + sigma_name(datum, j), e.what());
      }
      out.push_back(a);
    }
  return out;
}

bool is_neighbors(const Vec& sigma, const Vec& tau, const std::vector<Vec>& all) {
  if (sigma == tau) throw ValidationError("is_neighbors: sigma and tau coincide");
  if (std::find(all.begin(), all.end(), sigma) == all.end() || std::find(all.begin(), all.end(), tau) == all.end())
    throw ValidationError("is_neighbors: sigma and tau must belong to Sigma");
  if (!linearly_independent(std::vector<Vec>{sigma, tau})) return false;
  const std::size_t dim = sigma.size();

  // functionals nonnegative on cone(Sigma), as -(normals) of the dual cone
  std::vector<Vec> neg;
  for (const Vec& r : all) neg.push_back(scale(-1, r));
  Cone dual = cone_from_normals(neg, dim);
  std::vector<Vec> exposing;
  for (const Vec& f : dual.extremal_rays)
    if (dot(f, sigma).is_zero() && dot(f, tau).is_zero()) exposing.push_back(f);

  // the smallest face containing sigma and tau
  std::vector<Vec> face;
  for (const Vec& r : all)
    if (std::all_of(exposing.begin(), exposing.end(), [&](const Vec& f) { return dot(f, r).is_zero(); }))
      face.push_back(r);
  if (rank_of(face) != 2) return false;
  const std::vector<Vec> pair{sigma, tau};
  for (const Vec& r : face) {
    auto c = coordinates(pair, r);
    if (!c || (*c)[0].sign() < 0 || (*c)[1].sign() < 0) return false;
  }
  return true;
}

}  // namespace sphroots
