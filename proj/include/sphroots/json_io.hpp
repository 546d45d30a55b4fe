#pragma once

// JSON documents for every CLI verb, and the datum file format.
// Rationals are always written as "a/b" strings; coefficient vectors on
// simple roots are integer arrays.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphroots/cone.hpp"
#include "sphroots/verify.hpp"
#include "sphroots/weylx.hpp"

namespace sphroots {

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& r);
ojson vec_json(const Vec& v);
ojson coeffs_json(const Coeffs& c);
ojson nodes_json(NodeSet s);
Rational parse_rational_json(const ojson& j);  // integer or "a/b" string

// {"type":"A3","p":2,"sigma":[[1,0,1]],"sp":["a2"],"lattice":[[1,0,1],...]}
struct DatumSpec {
  std::string type;
  std::int64_t p = 1;
  std::vector<Coeffs> sigma;
  NodeSet sp;
  std::optional<std::vector<Vec>> lattice;  // simple-root coordinates
};
DatumSpec parse_datum(const ojson& j);  // throws ValidationError
DatumSpec read_datum_file(const std::string& path);
SphericalDatum make_datum(const DatumSpec& spec);

ojson enumerate_json(const RootSystem& system, std::int64_t p, std::int64_t q_max,
                     const std::vector<SphericalRoot>& roots);

struct CompatEntry {
  Coeffs sigma;
  std::vector<NodeSet> sp_sets;
};
ojson compat_json(const RootSystem& system, std::int64_t p, const std::vector<CompatEntry>& entries,
                  const std::vector<NodeSet>& common);

ojson weyl_json(const SphericalDatum& datum, const LittleWeylGroup& wx, const std::vector<Vec>& r_x,
                const std::vector<InvarianceVerdict>& invariance, const Sigma1Report& sigma1);

ojson cone_json(const SphericalDatum& datum, const Cone& cone, const ChamberDecomposition& chambers,
                const std::vector<DihedralAngle>& angles);

ojson report_json(const VerificationReport& report);

}  // namespace sphroots
