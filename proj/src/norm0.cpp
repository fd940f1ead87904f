#include "lorentz/norm0.hpp"

#include <fstream>
#include <numeric>

#include "json.hpp"
#include "lorentz/data.hpp"

namespace lorentz {

char type_letter(const RootSystem& affine) {
  if (affine.empty()) return 'x';
  char best = 'z';
  for (const auto& c : affine.components) {
    const char k = c.kind == RootKind::a ? 'a' : c.kind == RootKind::d ? 'd' : 'e';
    best = std::min(best, k);
  }
  return best;
}

RootSystem norm0_diagram(const LorentzVec& z) {
  if (is_weyl_multiple(z)) return {};
  RootSystem rs = classify_points(roots_at(z, 0));
  for (const auto& c : rs.components)
    if (!c.affine) throw MathError("norm-0 vector in D has a spherical component");
  return rs;
}

Norm0Class classify_norm0(const LorentzVec& x) {
  if (norm(x) != 0 || !in_positive_cone(x)) throw MathError("classify_norm0: not a norm-0 vector of the cone");
  Norm0Class out;
  out.multiplicity = content(x);
  if (out.multiplicity == 0) throw MathError("classify_norm0: zero vector");
  out.reduced = reduce_to_domain(divide(x, out.multiplicity)).vec;
  const RootSystem rs = norm0_diagram(out.reduced);
  out.type = rs.empty() ? kLeechType : rs.signature();
  out.letter = type_letter(rs);
  return out;
}

NormZeroRep rep_from_center(const std::string& type, int coxeter_h, const ScaledCenter& center) {
  auto fail = [&](const std::string& why) { throw MathError("norm-0 rep " + type + ": " + why); };
  if (coxeter_h <= 0 || center.den <= 0) fail("bad height or denominator");
  if (coxeter_h % center.den != 0) fail("denominator does not divide the height");
  NormZeroRep rep;
  rep.type = type;
  rep.coxeter_h = coxeter_h;
  rep.z.a = coxeter_h;
  const std::int64_t scale = coxeter_h / center.den;
  rep.z.lam = scale * center.num;
  if (!Leech::instance().contains(rep.z.lam)) fail("h * center is not a Leech point");
  const std::int64_t s = scaled_norm(rep.z.lam);
  if (s % (16 * coxeter_h) != 0) fail("b coordinate not integral");
  rep.z.b = s / (16 * coxeter_h);
  if (norm(rep.z) != 0) fail("norm is not 0");
  if (content(rep.z) != 1) fail("not primitive");
  if (!in_domain(rep.z)) fail("not in D");
  const RootSystem rs = norm0_diagram(rep.z);
  if (rs.signature() != type) fail("diagram is " + rs.signature());
  for (const auto& c : rs.components)
    if (c.coxeter != coxeter_h) fail("component Coxeter number differs from the height");
  rep.letter = type_letter(rs);
  return rep;
}

std::vector<NormZeroRep> load_norm0_orbits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open deep hole data: " + path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  if (doc.value("frame", "") != "scaled")
    throw std::runtime_error("deep hole data: expected centers in the scaled frame");
  std::vector<NormZeroRep> out;
  NormZeroRep leech;
  leech.type = kLeechType;
  leech.letter = 'x';
  leech.coxeter_h = 0;
  leech.z = weyl_vector();
  out.push_back(leech);
  for (const auto& hole : doc.at("holes")) {
    const std::string type = hole.at("type");
    const int h = hole.at("coxeter_h");
    const auto& coords = hole.at("center");
    if (coords.size() != kLeechDim) throw std::runtime_error("deep hole " + type + ": center needs 24 entries");
    std::vector<Rat> q;
    Int den = 1;
    for (const auto& c : coords) {
      Rat r(c.get<std::string>());
      r.canonicalize();
      q.push_back(r);
      den = lcm(den, Int(r.get_den()));
    }
    ScaledCenter center;
    center.den = den.get_si();
    for (std::size_t i = 0; i < kLeechDim; ++i) center.num[i] = Rat(q[i] * den).get_num().get_si();
    out.push_back(rep_from_center(type, h, center));
  }
  return out;
}

const std::vector<NormZeroRep>& norm0_orbits() {
  static const std::vector<NormZeroRep> reps = load_norm0_orbits(data_path("deep_holes.json"));
  return reps;
}

const NormZeroRep& norm0_rep(const std::string& type) {
  for (const auto& r : norm0_orbits())
    if (r.type == type) return r;
  throw std::runtime_error("unknown norm-0 type: " + type);
}

}  // namespace lorentz
