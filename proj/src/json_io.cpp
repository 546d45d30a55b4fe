#include "sphroots/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

ojson document(const std::string& kind) {
  ojson doc;
  doc["format"] = "sphroots-" + kind;
  doc["version"] = 1;
  return doc;
}

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
  return rows;
}

ojson matches_json(const SphericalRoot& s) {
  ojson a = ojson::array();
  for (const auto& m : s.matches) {
    ojson j;
    j["row"] = m.pattern->id;
    j["rank"] = m.rank;
    j["q"] = m.q;
    j["black"] = nodes_json(m.black);
    a.push_back(std::move(j));
  }
  return a;
}

std::string provenance_name(LatticeProvenance p) {
  return p == LatticeProvenance::UserSupplied ? "user-supplied" : "sigma-span-default";
}

ojson datum_json(const SphericalDatum& d) {
  ojson j;
  j["type"] = d.system().name();
  j["p"] = d.p();
  ojson sigma = ojson::array();
  for (const auto& s : d.sigma()) sigma.push_back(coeffs_json(s.coefficients));
  j["sigma"] = sigma;
  j["sp"] = nodes_json(d.sp());
  ojson lat = ojson::array();
  for (const Vec& b : d.lattice().basis()) lat.push_back(vec_json(*d.system().to_coeffs(b)));
  j["lattice"] = lat;
  j["lattice_provenance"] = provenance_name(d.provenance());
  return j;
}

}  // namespace

ojson rational_json(const Rational& r) { return r.fraction(); }

ojson vec_json(const Vec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

ojson coeffs_json(const Coeffs& c) { return ojson(c); }

ojson nodes_json(NodeSet s) {
  ojson a = ojson::array();
  for (int n : s.elements()) a.push_back(DynkinDiagram::node_name(n));
  return a;
}

Rational parse_rational_json(const ojson& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ValidationError("expected an integer or an \"a/b\" string, got " + j.dump());
}

DatumSpec parse_datum(const ojson& j) {
  if (!j.is_object()) throw ValidationError("datum must be a JSON object");
  for (const char* key : {"type", "p", "sigma"})
    if (!j.contains(key)) throw ValidationError(std::string("datum is missing \"") + key + "\"");
  for (const auto& [key, value] : j.items())
    if (key != "type" && key != "p" && key != "sigma" && key != "sp" && key != "lattice")
      throw ValidationError("unknown datum field \"" + key + "\"");
  DatumSpec d;
  if (!j["type"].is_string()) throw ValidationError("\"type\" must be a string");
  d.type = j["type"].get<std::string>();
  if (!j["p"].is_number_integer()) throw ValidationError("\"p\" must be an integer");
  d.p = j["p"].get<std::int64_t>();
  if (!j["sigma"].is_array()) throw ValidationError("\"sigma\" must be an array of coefficient arrays");
  for (const auto& s : j["sigma"]) {
    if (!s.is_array()) throw ValidationError("each spherical root must be an array of integers");
    Coeffs c;
    for (const auto& x : s) {
      if (!x.is_number_integer()) throw ValidationError("spherical root coefficients must be integers");
      c.push_back(x.get<std::int64_t>());
    }
    d.sigma.push_back(std::move(c));
  }
  if (j.contains("sp")) {
    if (!j["sp"].is_array()) throw ValidationError("\"sp\" must be an array of node names");
    for (const auto& n : j["sp"]) {
      if (!n.is_string()) throw ValidationError("S^P entries must be node names such as \"a2\"");
      const int node = DynkinDiagram::parse_node_name(n.get<std::string>());
      if (node >= 32) throw ValidationError("node name out of range");
      d.sp.insert(node);
    }
  }
  if (j.contains("lattice") && !j["lattice"].is_null()) {
    if (!j["lattice"].is_array()) throw ValidationError("\"lattice\" must be an array of vectors");
    std::vector<Vec> lat;
    for (const auto& v : j["lattice"]) {
      if (!v.is_array()) throw ValidationError("lattice vectors must be arrays");
      Vec x;
      for (const auto& e : v) x.push_back(parse_rational_json(e));
      lat.push_back(std::move(x));
    }
    d.lattice = std::move(lat);
  }
  return d;
}

DatumSpec read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open datum file " + path);
  try {
    return parse_datum(ojson::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("datum file " + path + ": " + e.what());
  }
}

SphericalDatum make_datum(const DatumSpec& spec) {
  auto system = std::make_shared<const RootSystem>(RootSystem::parse(spec.type));
  return SphericalDatum(system, spec.p, spec.sigma, spec.sp, spec.lattice);
}

ojson enumerate_json(const RootSystem& system, std::int64_t p, std::int64_t q_max,
                     const std::vector<SphericalRoot>& roots) {
  ojson doc = document("enumerate");
  doc["type"] = system.name();
  doc["p"] = p;
  doc["q_max"] = q_max;
  doc["count"] = roots.size();
  ojson a = ojson::array();
  for (const auto& s : roots) {
    ojson j;
    j["coefficients"] = coeffs_json(s.coefficients);
    j["label"] = format_coeffs(s.coefficients);
    j["support"] = nodes_json(s.support);
    j["reduced"] = is_reduced(s, system, p, q_max);
    j["matches"] = matches_json(s);
    a.push_back(std::move(j));
  }
  doc["roots"] = a;
  return doc;
}

ojson compat_json(const RootSystem& system, std::int64_t p, const std::vector<CompatEntry>& entries,
                  const std::vector<NodeSet>& common) {
  ojson doc = document("compat");
  doc["type"] = system.name();
  doc["p"] = p;
  ojson a = ojson::array();
  for (const auto& e : entries) {
    ojson sets = ojson::array();
    for (NodeSet s : e.sp_sets) sets.push_back(nodes_json(s));
    a.push_back({{"coefficients", coeffs_json(e.sigma)}, {"label", format_coeffs(e.sigma)}, {"sp_sets", sets}});
  }
  doc["roots"] = a;
  ojson c = ojson::array();
  for (NodeSet s : common) c.push_back(nodes_json(s));
  doc["common_minimal_sp"] = c;
  return doc;
}

ojson weyl_json(const SphericalDatum& datum, const LittleWeylGroup& wx, const std::vector<Vec>& r_x,
                const std::vector<InvarianceVerdict>& invariance, const Sigma1Report& sigma1) {
  ojson doc = document("weyl");
  doc["datum"] = datum_json(datum);
  doc["order"] = wx.order();
  ojson gens = ojson::array();
  for (std::size_t k = 0; k < wx.generators.size(); ++k) {
    const auto& lift = wx.lifts[k];
    ojson g;
    g["sigma"] = coeffs_json(datum.sigma()[k].coefficients);
    g["s_sigma"] = matrix_json(wx.generators[k]);
    g["lift_case"] = lift.lemma_case;
    g["lift_word"] = lift.element.word;
    ojson roots = ojson::array();
    for (const Vec& r : lift.roots) roots.push_back(vec_json(*datum.system().to_coeffs(r)));
    g["lift_roots"] = roots;
    gens.push_back(std::move(g));
  }
  doc["generators"] = gens;
  ojson words = ojson::array();
  for (const auto& w : wx.words) words.push_back(w);
  doc["element_words"] = words;
  ojson rx = ojson::array();
  for (const Vec& v : r_x) rx.push_back(vec_json(*datum.system().to_coeffs(v)));
  doc["R_X"] = rx;
  ojson inv = ojson::array();
  for (const auto& v : invariance) inv.push_back({{"generator", v.generator}, {"xi_p", v.xi_p}, {"strict", v.strict}});
  doc["lattice_invariance"] = inv;
  ojson s1 = ojson::array();
  for (const auto& e : sigma1.entries)
    s1.push_back({{"alpha", DynkinDiagram::node_name(e.alpha)},
                  {"sigma", coeffs_json(e.sigma)},
                  {"pairing", rational_json(e.pairing)},
                  {"even", e.even},
                  {"nonpositive", e.nonpositive}});
  doc["sigma1"] = {{"entries", s1}, {"parity_clean", sigma1.parity_clean()}, {"sign_clean", sigma1.sign_clean()}};
  return doc;
}

ojson cone_json(const SphericalDatum& datum, const Cone& cone, const ChamberDecomposition& chambers,
                const std::vector<DihedralAngle>& angles) {
  ojson doc = document("cone");
  doc["datum"] = datum_json(datum);
  doc["dimension"] = cone.dim;
  ojson normals = ojson::array();
  for (std::size_t k = 0; k < cone.facet_normals.size(); ++k)
    normals.push_back({{"sigma", coeffs_json(datum.sigma()[k].coefficients)}, {"dual", vec_json(cone.facet_normals[k])}});
  doc["facet_normals"] = normals;
  ojson lin = ojson::array();
  for (const Vec& l : cone.lineality) lin.push_back({{"dual", vec_json(l)}, {"ambient", vec_json(dual_to_ambient(datum, l))}});
  doc["lineality"] = lin;
  ojson rays = ojson::array();
  for (const Vec& r : cone.extremal_rays)
    rays.push_back({{"dual", vec_json(r)}, {"ambient", vec_json(primitive_ray(dual_to_ambient(datum, r)))}});
  doc["extremal_rays"] = rays;
  doc["little_weyl_order"] = chambers.total_chambers;
  doc["chamber_count"] = chambers.chambers.size();
  ojson ch = ojson::array();
  for (const auto& c : chambers.chambers) {
    ojson cr = ojson::array();
    for (const Vec& r : c.extremal_rays) cr.push_back(vec_json(r));
    ch.push_back({{"element", c.element}, {"interior_point", vec_json(c.interior_point)}, {"extremal_rays", cr}});
  }
  doc["chambers"] = ch;
  ojson an = ojson::array();
  for (const auto& a : angles)
    an.push_back({{"sigma", coeffs_json(datum.sigma()[a.i].coefficients)},
                  {"tau", coeffs_json(datum.sigma()[a.j].coefficients)},
                  {"normals_cos2", rational_json(a.cos2)},
                  {"product_sign", a.product_sign},
                  {"internal_angle", to_string(a.angle)}});
  doc["dihedral_angles"] = an;
  doc["simple_system"] = datum.sigma().empty() ? true : is_simple_system(datum.sigma_vectors(), datum.system());
  return doc;
}

ojson report_json(const VerificationReport& report) {
  ojson doc = document("report");
  doc["claim"] = report.claim;
  doc["search_space"] = report.search_space;
  doc["p"] = report.p;
  doc["q_max"] = report.q_max;
  doc["passed"] = report.passed();
  doc["counts"] = {{"expected", report.count(Verdict::Expected)},
                   {"unexpected", report.count(Verdict::Unexpected)},
                   {"missing", report.count(Verdict::Missing)},
                   {"excluded", report.count(Verdict::Excluded)}};
  ojson items = ojson::array();
  for (const auto& i : report.items) {
    ojson j;
    j["type"] = i.type;
    j["sigma"] = coeffs_json(i.sigma);
    j["tau"] = i.tau.empty() ? ojson(nullptr) : coeffs_json(i.tau);
    j["verdict"] = to_string(i.verdict);
    j["detail"] = i.detail;
    items.push_back(std::move(j));
  }
  doc["items"] = items;
  return doc;
}

}  // namespace sphroots
