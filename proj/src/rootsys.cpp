#include "lorentz/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lorentz {

namespace {

char kind_letter(RootKind k) {
  switch (k) {
    case RootKind::a: return 'a';
    case RootKind::d: return 'd';
    case RootKind::e: return 'e';
  }
  return '?';
}

int kind_order(RootKind k) {
  switch (k) {
    case RootKind::e: return 0;
    case RootKind::d: return 1;
    case RootKind::a: return 2;
  }
  return 3;
}

IntMat component_cartan(const IpMatrix& ip, const std::vector<std::size_t>& nodes) {
  IntMat c(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) c(i, j) = -ip[nodes[i]][nodes[j]];
  return c;
}

// Lengths of the arms hanging off a branch node.
std::vector<int> arm_lengths(const std::vector<std::vector<std::size_t>>& adj, std::size_t branch) {
  std::vector<int> arms;
  for (std::size_t start : adj[branch]) {
    int len = 1;
    std::size_t prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[cur].size() != 1) return {};
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

ADEComponent identify(const IpMatrix& ip, const std::vector<std::size_t>& nodes) {
  const std::size_t m = nodes.size();
  std::vector<std::vector<std::size_t>> adj(m);
  std::size_t edges = 0;
  bool double_bond = false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::int64_t v = ip[nodes[i]][nodes[j]];
      if (v == 0) continue;
      if (v == 2) double_bond = true;
      else if (v != 1) throw MathError("root diagram: inner product outside {0,1,2}");
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }

  ADEComponent c;
  c.nodes = nodes;
  auto fail = [&]() -> ADEComponent { throw MathError("root diagram is not of ADE type"); };

  if (double_bond) {
    if (m != 2) return fail();
    c.kind = RootKind::a;
    c.rank = 1;
    c.affine = true;
  } else if (edges + 1 == m) {
    std::vector<std::size_t> branches;
    for (std::size_t i = 0; i < m; ++i) {
      if (adj[i].size() > 4) return fail();
      if (adj[i].size() >= 3) branches.push_back(i);
    }
    if (branches.empty()) {
      c.kind = RootKind::a;
      c.rank = static_cast<int>(m);
    } else if (branches.size() == 1 && adj[branches[0]].size() == 4) {
      if (m != 5) return fail();
      c.kind = RootKind::d;
      c.rank = 4;
      c.affine = true;
    } else if (branches.size() == 1) {
      const std::vector<int> arms = arm_lengths(adj, branches[0]);
      if (arms.size() != 3) return fail();
      const int p = arms[0], q = arms[1], r = arms[2];
      if (p == 1 && q == 1) {
        c.kind = RootKind::d;
        c.rank = static_cast<int>(m);
      } else if (p == 1 && q == 2 && r <= 4) {
        c.kind = RootKind::e;
        c.rank = static_cast<int>(m);
      } else if ((p == 2 && q == 2 && r == 2) || (p == 1 && q == 3 && r == 3) || (p == 1 && q == 2 && r == 5)) {
        c.kind = RootKind::e;
        c.rank = static_cast<int>(m) - 1;
        c.affine = true;
      } else {
        return fail();
      }
    } else if (branches.size() == 2) {
      // Affine D_n: two degree-3 nodes joined by a path, each with two leaves.
      for (std::size_t b : branches) {
        if (adj[b].size() != 3) return fail();
        int leaves = 0;
        for (std::size_t x : adj[b]) leaves += adj[x].size() == 1;
        if (leaves != 2) return fail();
      }
      c.kind = RootKind::d;
      c.rank = static_cast<int>(m) - 1;
      c.affine = true;
    } else {
      return fail();
    }
  } else if (edges == m && m >= 3) {
    for (std::size_t i = 0; i < m; ++i)
      if (adj[i].size() != 2) return fail();
    c.kind = RootKind::a;
    c.rank = static_cast<int>(m) - 1;
    c.affine = true;
  } else {
    return fail();
  }

  const IntMat cartan = component_cartan(ip, nodes);
  c.marks = c.affine ? affine_marks(cartan) : highest_root_marks(cartan);
  const std::int64_t sum = std::accumulate(c.marks.begin(), c.marks.end(), std::int64_t{0});
  c.coxeter = static_cast<int>(c.affine ? sum : sum + 1);
  if (c.coxeter != coxeter_number(c.kind, c.rank)) throw MathError("root diagram: Coxeter number mismatch");
  return c;
}

}  // namespace

int coxeter_number(RootKind kind, int rank) {
  switch (kind) {
    case RootKind::a: return rank + 1;
    case RootKind::d: return 2 * rank - 2;
    case RootKind::e: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

std::string ADEComponent::name() const {
  char k = kind_letter(kind);
  if (affine) k = static_cast<char>(k - 'a' + 'A');
  return std::string(1, k) + "_" + std::to_string(rank);
}

std::string RootSystem::signature() const {
  if (components.empty()) return "None";
  std::string out;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j].name() == components[i].name()) ++j;
    if (!out.empty()) out += ' ';
    out += components[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

int RootSystem::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::int64_t RootSystem::root_count() const {
  std::int64_t r = 0;
  for (const auto& c : components) r += c.root_count();
  return r;
}

RootSystem classify_gram(const IpMatrix& ip) {
  const std::size_t n = ip.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (ip[i].size() != n) throw MathError("classify: inner product matrix not square");
    if (ip[i][i] != -2) throw MathError("classify: roots must have norm -2");
    for (std::size_t j = 0; j < n; ++j)
      if (ip[i][j] != ip[j][i]) throw MathError("classify: inner products not symmetric");
  }
  std::vector<int> comp(n, -1);
  RootSystem rs;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s};
    comp[s] = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && ip[nodes[k]][j] != 0) {
          comp[j] = 1;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    rs.components.push_back(identify(ip, nodes));
  }
  std::stable_sort(rs.components.begin(), rs.components.end(), [](const ADEComponent& x, const ADEComponent& y) {
    if (x.affine != y.affine) return y.affine;
    if (x.rank != y.rank) return x.rank > y.rank;
    return kind_order(x.kind) < kind_order(y.kind);
  });
  return rs;
}

RootSystem classify_roots(const std::vector<LorentzVec>& roots) {
  IpMatrix ip(roots.size(), std::vector<std::int64_t>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) ip[i][j] = inner(roots[i], roots[j]);
  return classify_gram(ip);
}

IpMatrix point_gram(const std::vector<LeechVec>& mus) {
  // (r_mu, r_nu) = |mu - nu|^2 / 2 - 2; scaled norms carry a factor 8.
  IpMatrix ip(mus.size(), std::vector<std::int64_t>(mus.size()));
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i; j < mus.size(); ++j) {
      const std::int64_t s = scaled_norm(mus[i] - mus[j]);
      if (s % 16 != 0) throw MathError("point_gram: non-integral root inner product");
      ip[i][j] = ip[j][i] = s / 16 - 2;
    }
  return ip;
}

RootSystem classify_points(const std::vector<LeechVec>& mus) { return classify_gram(point_gram(mus)); }

LorentzVec highest_root(const ADEComponent& c, const std::vector<LorentzVec>& roots) {
  if (c.affine) throw MathError("highest_root: affine component");
  LorentzVec h;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) h = h + c.marks[i] * roots.at(c.nodes[i]);
  return h;
}

std::vector<std::int64_t> highest_root_marks(const IntMat& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<std::int64_t> beta(n, 0);
  beta[0] = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += cartan(i, j).get_si() * beta[j];
      if (pairing < 0) {
        beta[i] -= pairing;
        moved = true;
      }
    }
  }
  return beta;
}

std::vector<std::int64_t> affine_marks(const IntMat& cartan) {
  IntMat k = left_kernel(cartan);
  if (k.rows() != 1) throw MathError("affine_marks: Cartan matrix kernel is not one-dimensional");
  std::vector<std::int64_t> v(cartan.rows());
  const int sign = k(0, 0) < 0 ? -1 : 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = sign * k(0, i).get_si();
    if (v[i] <= 0) throw MathError("affine_marks: null vector not positive");
  }
  return v;
}

std::vector<std::vector<std::int64_t>> positive_roots(const IntMat& cartan) {
  // Grow roots by adding simple roots while the alpha-string allows it.
  const std::size_t n = cartan.rows();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    out.push_back(e);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::vector<std::int64_t> beta = out[k];
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += cartan(i, j).get_si() * beta[j];
      // Simply laced: beta + alpha_i is a root iff (beta, alpha_i) == -1.
      if (pairing != -1) continue;
      std::vector<std::int64_t> next = beta;
      ++next[i];
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

IntMat cartan_matrix(RootKind kind, int rank) {
  const std::size_t n = static_cast<std::size_t>(rank);
  IntMat c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { c(i, j) = c(j, i) = -1; };
  switch (kind) {
    case RootKind::a:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case RootKind::d:
      if (rank < 4) throw MathError("d_n needs n >= 4");
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case RootKind::e:
      if (rank < 6 || rank > 8) throw MathError("e_n needs 6 <= n <= 8");
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
  }
  return c;
}

Rat weyl_vector_norm(const ADEComponent& c) {
  if (c.affine) throw MathError("weyl_vector_norm: affine component");
  const IntMat cartan = cartan_matrix(c.kind, c.rank);
  const RatMat inv = inverse(cartan);
  // With Lorentzian Gram -C, rho = sum x_j c_j and -C x = 1, rho^2 = sum x_j.
  Rat s = 0;
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) s -= inv(i, j);
  return s;
}

Rat weyl_vector_norm(const RootSystem& rs) {
  Rat s = 0;
  for (const auto& c : rs.components) s += weyl_vector_norm(c);
  return s;
}

int max_orthogonal(const ADEComponent& c) {
  if (c.affine) throw MathError("max_orthogonal: affine component");
  switch (c.kind) {
    case RootKind::a: return (c.rank + 1) / 2;
    case RootKind::d: return 2 * (c.rank / 2);
    case RootKind::e: return c.rank == 6 ? 4 : c.rank;
  }
  return 0;
}

int max_orthogonal(const RootSystem& rs) {
  int s = 0;
  for (const auto& c : rs.components) s += max_orthogonal(c);
  return s;
}

std::map<std::string, int> signature_counts(const std::string& sig) {
  std::map<std::string, int> out;
  if (sig == "None") return out;
  std::istringstream in(sig);
  std::string tok;
  while (in >> tok) {
    int count = 1;
    const auto hat = tok.find('^');
    std::string name = tok.substr(0, hat);
    if (hat != std::string::npos) count = std::stoi(tok.substr(hat + 1));
    coxeter_number(name);  // validates
    out[name] += count;
  }
  return out;
}

int coxeter_number(const std::string& component) {
  if (component.size() < 3 || component[1] != '_') throw MathError("bad component name: " + component);
  const char k = static_cast<char>(std::tolower(static_cast<unsigned char>(component[0])));
  const int rank = std::stoi(component.substr(2));
  const bool ok = rank >= 1 && (k == 'a' || (k == 'd' && rank >= 4) || (k == 'e' && rank >= 6 && rank <= 8));
  if (!ok) throw MathError("bad component name: " + component);
  return coxeter_number(k == 'a' ? RootKind::a : k == 'd' ? RootKind::d : RootKind::e, rank);
}

}  // namespace lorentz
