#include "lorentz/lattices.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lorentz/enumerate.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

namespace {

DefiniteLattice reduce_lattice(const IntMat& basis, const IntMat& gram) {
  if (!is_positive_definite(gram)) throw MathError("lattice is not positive definite");
  LllResult red = lll_gram(gram);
  DefiniteLattice out;
  out.form = QuadForm(red.gram, Signature::positive_definite);
  if (basis.rows() != 0) out.basis = red.transform * basis;
  return out;
}

}  // namespace

DefiniteLattice orthogonal_complement(const std::vector<LorentzVec>& vs) {
  const IntMat& g = ii_gram();
  const std::size_t n = g.rows();
  IntMat m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const auto y = ii_coords(vs[j]);
    for (std::size_t i = 0; i < n; ++i) {
      Int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += g(i, k) * static_cast<long>(y[k]);
      m(i, j) = s;
    }
  }
  IntMat k = left_kernel(m);
  IntMat gram = k * g * k.transpose();
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram(i, j) = -gram(i, j);
  return reduce_lattice(k, gram);
}

DefiniteLattice perp_gram(const LorentzVec& u) {
  const std::int64_t n = norm(u);
  if (n != 2 && n != 4 && n != 10) throw MathError("perp_gram: norm must be 2, 4 or 10");
  if (content(u) != 1) throw MathError("perp_gram: vector is not primitive");
  DefiniteLattice l = orthogonal_complement({u});
  if (l.form.dim() != 25) throw MathError("perp_gram: wrong dimension");
  if (det(l.form.gram()) != n) throw MathError("perp_gram: determinant differs from the norm");
  if (!l.form.is_even()) throw MathError("perp_gram: lattice is not even");
  return l;
}

std::vector<IntVec> short_vectors(const QuadForm& q, std::int64_t n) {
  SphereEnumerator en(q.gram());
  std::vector<IntVec> out;
  std::vector<double> center(q.dim(), 0.0);
  IntVec v(q.dim());
  en.visit(center, static_cast<double>(n) + SphereEnumerator::margin(static_cast<double>(n)),
           [&](const std::vector<std::int64_t>& y) {
             // Keep one of each +-pair: the first nonzero coordinate positive.
             std::size_t k = 0;
             while (k < y.size() && y[k] == 0) ++k;
             if (k == y.size() || y[k] < 0) return true;
             for (std::size_t i = 0; i < y.size(); ++i) v[i] = static_cast<long>(y[i]);
             if (q.norm(v) <= n) out.push_back(v);
             return true;
           });
  return out;
}

std::int64_t count_norm(const QuadForm& q, std::int64_t n) {
  std::int64_t c = 0;
  for (const IntVec& v : short_vectors(q, n))
    if (q.norm(v) == n) c += 2;
  return c;
}

std::int64_t minimum(const QuadForm& q) {
  for (std::int64_t n = 1;; ++n) {
    if (count_norm(q, n) > 0) return n;
  }
}

DiscriminantGroup discriminant_group(const QuadForm& q) {
  SmithResult s = snf(q.gram());
  DiscriminantGroup out;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    const Int d = s.diag(i, i);
    if (d == 0) throw MathError("discriminant_group: degenerate form");
    if (d == 1) continue;
    RatVec g(q.dim());
    for (std::size_t j = 0; j < q.dim(); ++j) g[j] = Rat(s.left(i, j), d);
    for (auto& x : g) x.canonicalize();
    out.generators.push_back(std::move(g));
    out.orders.push_back(d);
  }
  return out;
}

QuadForm overlattice(const QuadForm& q, const std::vector<RatVec>& glue) {
  const std::size_t n = q.dim();
  Int den = 1;
  for (const RatVec& g : glue)
    for (const Rat& x : g) den = lcm(den, Int(x.get_den()));
  IntMat gens(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
  for (std::size_t r = 0; r < glue.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) gens(n + r, j) = Rat(glue[r][j] * den).get_num();
  HermiteResult h = hnf(gens);
  RatMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(h.form(i, j), den);
  RatMat g = basis * to_rational(q.gram()) * basis.transpose();
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j).canonicalize();
      if (g(i, j).get_den() != 1) throw MathError("overlattice: glue is not integral");
      out(i, j) = g(i, j).get_num();
    }
  LllResult red = lll_gram(out);
  return QuadForm(red.gram, Signature::positive_definite);
}

UnimodularData unimodular_from(const LorentzVec& u) {
  if (norm(u) != 4) throw MathError("unimodular_from: norm must be 4");
  DefiniteLattice perp = perp_gram(u);
  DiscriminantGroup dg = discriminant_group(perp.form);
  if (dg.orders.size() != 1 || dg.orders[0] != 4) throw MathError("unimodular_from: discriminant is not Z/4");
  RatVec half(dg.generators[0].size());
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = 2 * dg.generators[0][i];
  UnimodularData out;
  out.lattice.form = overlattice(perp.form, {half});
  const QuadForm& a = out.lattice.form;
  if (det(a.gram()) != 1) throw MathError("unimodular_from: glue did not give a unimodular lattice");
  std::vector<IntVec> units;
  std::vector<IntVec> two;
  for (IntVec& v : short_vectors(a, 2)) {
    const Int n = a.norm(v);
    if (n == 1) units.push_back(std::move(v));
    else if (n == 2) two.push_back(std::move(v));
  }
  out.norm1_count = 2 * static_cast<std::int64_t>(units.size());
  out.norm2_count = 2 * static_cast<std::int64_t>(two.size());
  out.a1_dim = 25 - static_cast<int>(units.size());
  if (out.a1_dim == 0) {
    out.a1_even = true;
    return out;
  }
  // A_1: the vectors of A orthogonal to every norm-1 vector.
  IntMat pairing(a.dim(), units.size());
  for (std::size_t j = 0; j < units.size(); ++j) {
    IntVec col = mul(units[j], a.gram());
    for (std::size_t i = 0; i < a.dim(); ++i) pairing(i, j) = col[i];
  }
  IntMat k = left_kernel(pairing);
  IntMat g1 = k * a.gram() * k.transpose();
  if (static_cast<int>(g1.rows()) != out.a1_dim || det(g1) != 1)
    throw MathError("unimodular_from: A_1 is not a unimodular summand");
  QuadForm a1(g1, Signature::positive_definite);
  out.a1_even = a1.is_even();
  out.a1_roots = count_norm(a1, 2);
  return out;
}

Norm4Profile neighbors(const LorentzVec& u) {
  Norm4Profile p;
  p.lattice = unimodular_from(u);
  p.z1 = norm0_at(u, 1);
  p.z2 = norm0_at(u, 2);
  if (static_cast<std::int64_t>(p.z2.size()) != p.lattice.norm1_count)
    throw MathError("neighbors: norm-1 vectors of A do not match norm-0 vectors at inner product 2");
  std::vector<std::string> labels;
  for (const LorentzVec& z : p.z2) labels.push_back(norm0_label(z));
  std::sort(labels.begin(), labels.end());
  if (!p.z1.empty()) {
    // A_1 is the Niemeier lattice of z1; listed as 2 z1, which is in z2
    p.kind = 1;
    if (p.z1.size() != 1) throw MathError("neighbors: more than one norm-0 vector at inner product 1");
    p.neighbors = {norm0_label(2 * p.z1.front())};
    return p;
  } else if (p.lattice.norm1_count == 0) {
    p.kind = 4;
  } else if (p.lattice.a1_dim == 24 && !p.lattice.a1_even) {
    p.kind = 3;
    if (labels.size() != 2) throw MathError("neighbors: expected two norm-0 vectors");
    p.neighbors = labels;
    return p;
  } else {
    p.kind = 2;
  }
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  p.neighbors = labels;
  return p;
}

std::optional<QuadForm> glue_with_rank_one(const QuadForm& q, std::int64_t k) {
  DiscriminantGroup dg = discriminant_group(q);
  if (dg.orders.size() != 1 || dg.orders[0] != k) return std::nullopt;
  const RatVec& g = dg.generators[0];
  const std::size_t n = q.dim();
  // q + <k>: the extra coordinate has norm k, its dual generator is e/k.
  IntMat big(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big(i, j) = q.gram()(i, j);
  big(n, n) = k;
  const QuadForm sum(big, Signature::positive_definite);
  for (std::int64_t j = 1; j < k; ++j) {
    if (std::gcd(j, k) != 1) continue;
    RatVec glue(n + 1);
    for (std::size_t i = 0; i < n; ++i) glue[i] = g[i] * j;
    glue[n] = Rat(1, k);
    glue[n].canonicalize();
    if (sum.norm(glue).get_den() != 1) continue;
    return overlattice(sum, {glue});
  }
  return std::nullopt;
}

QuadForm rootless26_gram(const LorentzVec& u) {
  if (norm(u) != 10) throw MathError("rootless26_gram: norm must be 10");
  const auto q = glue_with_rank_one(perp_gram(u).form, 10);
  if (!q) throw MathError("rootless26_gram: no glue of integral norm");
  if (det(q->gram()) != 1) throw MathError("rootless26_gram: result is not unimodular");
  return *q;
}

std::string gram_text(const QuadForm& q) {
  std::ostringstream os;
  os << q.dim() << '\n';
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = 0; j < q.dim(); ++j) os << (j ? " " : "") << q.gram()(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace lorentz
