#include "lorentz/tables.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/rootsys.hpp"

namespace lorentz {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string rep_text(const LorentzVec& u) {
  std::ostringstream os;
  for (std::size_t i = 0; i < u.lam.size(); ++i) os << (i ? "," : "") << u.lam[i];
  os << ';' << u.a << ',' << u.b;
  return os.str();
}

nlohmann::json rep_json(const LorentzVec& u) {
  std::vector<std::int64_t> v(u.lam.begin(), u.lam.end());
  v.push_back(u.a);
  v.push_back(u.b);
  return v;
}

}  // namespace

std::vector<Norm0Row> norm0_rows() {
  std::vector<Norm0Row> out;
  for (const NormZeroRep& r : norm0_orbits()) out.push_back({r.z.a, r.letter, r.type});
  std::stable_sort(out.begin(), out.end(), [](const Norm0Row& x, const Norm0Row& y) { return x.height < y.height; });
  return out;
}

char ancestry_letter(const std::string& label) {
  const auto star = label.find('*');
  const std::string type = star == std::string::npos ? label : label.substr(star + 1);
  const char c = norm0_rep(type).letter;
  return star == std::string::npos ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

Norm2Row norm2_row(const OrbitRecord& r) {
  Norm2Row row;
  row.key = r.key;
  row.height = r.rep.a;
  row.type1 = !r.fp.z1.empty();
  row.roots = r.fp.roots;
  row.s = max_orthogonal(classify_points(roots_at(r.rep, 0)));
  for (const std::string& t : r.fp.targets) {
    const auto gt = t.find('>');
    row.ancestry.push_back(t.substr(0, gt + 1) + ancestry_letter(t.substr(gt + 1)));
  }
  std::sort(row.ancestry.begin(), row.ancestry.end());
  row.rep = r.rep;
  return row;
}

Norm4Row norm4_row(const OrbitRecord& r, const Norm4Profile& p) {
  Norm4Row row;
  row.key = r.key;
  row.height = r.rep.a;
  row.dim = p.lattice.a1_dim;
  row.even = p.lattice.a1_even;
  row.roots = r.fp.roots;
  row.neighbors = p.neighbors;
  row.kind = p.kind;
  row.ancestry = r.fp.targets;
  row.rep = r.rep;
  return row;
}

std::string tsv(const std::vector<Norm0Row>& rows) {
  std::ostringstream os;
  os << "height\tletter\ttype\n";
  for (const auto& r : rows) os << r.height << '\t' << r.letter << '\t' << r.type << '\n';
  return os.str();
}

std::string tsv(const std::vector<Norm2Row>& rows) {
  std::ostringstream os;
  os << "id\theight\ttype1\troots\tS\tancestry\trep\n";
  for (const auto& r : rows)
    os << r.key << '\t' << r.height << '\t' << (r.type1 ? "*" : "") << '\t' << r.roots << '\t' << r.s << '\t'
       << join(r.ancestry, " ") << '\t' << rep_text(r.rep) << '\n';
  return os.str();
}

std::string tsv(const std::vector<Norm4Row>& rows) {
  std::ostringstream os;
  os << "id\theight\tdim\teven\troots\tneighbors\tclass\tancestry\trep\n";
  for (const auto& r : rows)
    os << r.key << '\t' << r.height << '\t' << r.dim << '\t' << (r.even ? "E" : "") << '\t' << r.roots << '\t'
       << join(r.neighbors, ",") << '\t' << r.kind << '\t' << join(r.ancestry, " ") << '\t' << rep_text(r.rep)
       << '\n';
  return os.str();
}

std::string json(const std::vector<Norm0Row>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) j.push_back({{"height", r.height}, {"letter", std::string(1, r.letter)}, {"type", r.type}});
  return j.dump(1);
}

std::string json(const std::vector<Norm2Row>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"id", r.key},
                 {"height", r.height},
                 {"type1", r.type1},
                 {"roots", r.roots},
                 {"S", r.s},
                 {"ancestry", r.ancestry},
                 {"rep", rep_json(r.rep)}});
  return j.dump(1);
}

std::string json(const std::vector<Norm4Row>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"id", r.key},
                 {"height", r.height},
                 {"dim", r.dim},
                 {"even", r.even},
                 {"roots", r.roots},
                 {"neighbors", r.neighbors},
                 {"class", r.kind},
                 {"ancestry", r.ancestry},
                 {"rep", rep_json(r.rep)}});
  return j.dump(1);
}

}  // namespace lorentz
