// Offline generator for data/deep_holes.json.
//
// Starting from w and the A_1^24 hole, walks norm-0 vectors x with
// (x, z) = 2 around every type z found so far, reduces them into D and
// records one representative per new type.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>

#include "json.hpp"
#include "lorentz/lattices.hpp"
#include "lorentz/norm0.hpp"

using namespace lorentz;

namespace {

LorentzVec partner(const LorentzVec& z) {
  const IntMat& g = ii_gram();
  const auto y = ii_coords(z);
  IntMat f(g.rows(), 1);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Int s = 0;
    for (std::size_t k = 0; k < g.rows(); ++k) s += g(i, k) * static_cast<long>(y[k]);
    f(i, 0) = s;
  }
  HermiteResult h = hnf(f);
  if (h.form(0, 0) != 1) throw MathError("norm-0 vector is not primitive");
  const LorentzVec p = from_ii_coords(h.transform.row(0));
  return p - (norm(p) / 2) * z;
}

LorentzVec combine(const IntMat& basis, const IntVec& coeffs) {
  IntVec y(basis.cols(), Int(0));
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c) y[c] += coeffs[r] * basis(r, c);
  return from_ii_coords(y);
}

void write(const std::string& path, const std::map<std::string, LorentzVec>& found) {
  std::vector<std::pair<std::int64_t, std::string>> order;
  for (const auto& [type, z] : found)
    if (type != kLeechType) order.push_back({z.a, type});
  std::sort(order.begin(), order.end());
  nlohmann::json doc;
  doc["frame"] = "scaled";
  doc["holes"] = nlohmann::json::array();
  for (const auto& [h, type] : order) {
    const LorentzVec& z = found.at(type);
    nlohmann::json center = nlohmann::json::array();
    for (std::int64_t x : z.lam) {
      Rat r(x, h);
      r.canonicalize();
      center.push_back(r.get_str());
    }
    doc["holes"].push_back({{"type", type}, {"coxeter_h", h}, {"center", center}});
  }
  std::ofstream(path) << doc.dump(1) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path = argc > 1 ? argv[1] : "deep_holes.json";
  const std::size_t samples = argc > 2 ? std::stoul(argv[2]) : 1500;
  std::mt19937_64 rng(20240601);

  std::map<std::string, LorentzVec> found;
  found[kLeechType] = weyl_vector();
  LorentzVec a1;
  a1.lam[0] = 8;
  a1.a = 2;
  a1.b = 2;
  found[classify_norm0(a1).type] = a1;
  std::vector<LorentzVec> queue{weyl_vector(), a1};

  while (!queue.empty() && found.size() < 24) {
    // Tallest hole first; the rare types sit next to the tall ones.
    auto top = std::max_element(queue.begin(), queue.end(),
                                [](const LorentzVec& p, const LorentzVec& q) { return p.a < q.a; });
    const LorentzVec z = *top;
    queue.erase(top);
    const LorentzVec zp = partner(z);
    DefiniteLattice n = orthogonal_complement({z, zp});
    std::vector<IntVec> fours, eights;
    for (IntVec& v : short_vectors(n.form, 4))
      if (n.form.norm(v) == 4) fours.push_back(std::move(v));
    std::shuffle(fours.begin(), fours.end(), rng);
    for (std::size_t i = 0; i + 1 < fours.size() && eights.size() < samples; i += 2) {
      if (n.form.inner(fours[i], fours[i + 1]) != 0) continue;
      IntVec s(fours[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = fours[i][k] + fours[i + 1][k];
      eights.push_back(std::move(s));
    }
    if (fours.size() > samples) fours.resize(samples);
    std::size_t tried = 0;
    for (const auto* pool : {&fours, &eights}) {
      for (const IntVec& v : *pool) {
        const LorentzVec lv = combine(n.basis, v);
        const std::int64_t beta = n.form.norm(v).get_si() / 4;
        LorentzVec x = 2 * zp + beta * z + lv;
        if (x.a < 0 || (x.a == 0 && x.b < 0)) x = -1 * x;
        const Norm0Class cls = classify_norm0(x);
        ++tried;
        if (found.count(cls.type)) continue;
        found[cls.type] = cls.reduced;
        queue.push_back(cls.reduced);
        std::cerr << "found " << cls.type << " at height " << cls.reduced.a << " (" << found.size() << ")\n";
        write(out_path, found);
      }
    }
    std::cerr << "expanded " << classify_norm0(z).type << ": " << tried << " vectors\n";
  }
  write(out_path, found);
  std::cerr << found.size() << " types written to " << out_path << '\n';
  return found.size() == 24 ? 0 : 1;
}
