#include "lorentz/exact.hpp"

#include <sstream>
#include <utility>

namespace lorentz {

RatMat to_rational(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

bool is_symmetric(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (simultaneous)
void combine_rows(IntMat& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u,
                  const Int& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int x = m(a, c);
    Int y = m(b, c);
    m(a, c) = s * x + t * y;
    m(b, c) = u * x + v * y;
  }
}

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += q * m(src, c);
}

void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += q * m(r, src);
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void negate_row(IntMat& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hnf(const IntMat& m) {
  HermiteResult res;
  res.form = m;
  res.transform = IntMat::identity(m.rows());
  IntMat& a = res.form;
  IntMat& u = res.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      Int p = a(r, c) / g;
      Int q = a(i, c) / g;
      // det [[s, t], [-q, p]] = s*p + t*q = 1
      combine_rows(a, r, i, s, t, Int(-q), p);
      combine_rows(u, r, i, s, t, Int(-q), p);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Int q = floor_div(a(k, c), a(r, c));
      add_row_multiple(a, k, r, Int(-q));
      add_row_multiple(u, k, r, Int(-q));
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SmithResult snf(const IntMat& m) {
  SmithResult res;
  res.diag = m;
  res.left = IntMat::identity(m.rows());
  res.right = IntMat::identity(m.cols());
  IntMat& a = res.diag;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          Int v = abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (!found) return res;
      a.swap_rows(t, pi);
      res.left.swap_rows(t, pi);
      swap_cols(a, t, pj);
      swap_cols(res.right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = floor_div(a(i, t), a(t, t));
        add_row_multiple(a, i, t, Int(-q));
        add_row_multiple(res.left, i, t, Int(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = floor_div(a(t, j), a(t, t));
        add_col_multiple(a, j, t, Int(-q));
        add_col_multiple(res.right, j, t, Int(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row_multiple(a, t, i, Int(1));
            add_row_multiple(res.left, t, i, Int(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(res.left, t);
    }
  }
  return res;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw MathError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMat left_kernel(const IntMat& m) {
  HermiteResult h = hnf(m);
  IntMat k(m.rows() - h.rank, m.rows());
  for (std::size_t i = h.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - h.rank, j) = h.transform(i, j);
  return k;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw MathError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw MathError("singular matrix");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMat inverse(const IntMat& m) { return inverse(to_rational(m)); }

std::optional<RatVec> solve_left(const RatMat& m, const RatVec& rhs) {
  // x * m == rhs  <=>  m^T x^T == rhs^T
  const std::size_t nvars = m.rows();
  const std::size_t neqs = m.cols();
  if (rhs.size() != neqs) throw MathError("solve_left shape mismatch");
  RatMat a(neqs, nvars + 1);
  for (std::size_t e = 0; e < neqs; ++e) {
    for (std::size_t v = 0; v < nvars; ++v) a(e, v) = m(v, e);
    a(e, nvars) = rhs[e];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < neqs; ++c) {
    std::size_t p = r;
    while (p < neqs && a(p, c) == 0) ++p;
    if (p == neqs) continue;
    a.swap_rows(r, p);
    Rat piv = a(r, c);
    for (std::size_t j = 0; j <= nvars; ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < neqs; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j <= nvars; ++j) a(i, j) -= f * a(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < neqs; ++i)
    if (a(i, nvars) != 0) return std::nullopt;
  RatVec x(nvars, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a(i, nvars);
  return x;
}

LdlResult ldl(const IntMat& gram) {
  const std::size_t n = gram.rows();
  LdlResult res{RatMat::identity(n), RatVec(n, Rat(0))};
  for (std::size_t j = 0; j < n; ++j) {
    Rat d = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= res.lower(j, k) * res.lower(j, k) * res.diag[k];
    res.diag[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat v = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= res.lower(i, k) * res.lower(j, k) * res.diag[k];
      if (d == 0) throw MathError("ldl: singular leading minor");
      res.lower(i, j) = v / d;
    }
  }
  return res;
}

bool is_positive_definite(const IntMat& gram) {
  if (!is_symmetric(gram)) return false;
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (det(minor) <= 0) return false;
  }
  return true;
}

QuadForm::QuadForm(IntMat gram, Signature sig) : gram_(std::move(gram)), sig_(sig) {
  if (!is_symmetric(gram_)) throw MathError("QuadForm: Gram matrix not symmetric");
  if (sig_ == Signature::positive_definite && !is_positive_definite(gram_))
    throw MathError("QuadForm: Gram matrix not positive definite");
}

bool QuadForm::is_even() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Int QuadForm::inner(const IntVec& x, const IntVec& y) const {
  Int s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Int t = 0;
    for (std::size_t j = 0; j < dim(); ++j) t += gram_(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

Int QuadForm::norm(const IntVec& x) const { return inner(x, x); }

Rat QuadForm::norm(const RatVec& x) const {
  Rat s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) s += x[i] * gram_(i, j) * x[j];
  return s;
}

LllResult lll_gram(const IntMat& gram_in) {
  const std::size_t n = gram_in.rows();
  LllResult res{gram_in, IntMat::identity(n)};
  if (n <= 1) return res;
  IntMat& g = res.gram;
  IntMat& h = res.transform;
  RatMat mu(n, n);
  RatVec bstar(n, Rat(0));
  const Rat delta(99, 100);
  const Rat half(1, 2);

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu(k, l)) <= half) return;
    // q = nearest integer to mu(k,l)
    Rat shifted = mu(k, l) + half;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    // b_k <- b_k - q b_l
    Int gkk = g(k, k) - 2 * q * g(k, l) + q * q * g(l, l);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      g(k, i) -= q * g(l, i);
      g(i, k) = g(k, i);
    }
    g(k, k) = gkk;
    add_row_multiple(h, k, l, Int(-q));
    mu(k, l) -= q;
    for (std::size_t i = 0; i < l; ++i) mu(k, i) -= q * mu(l, i);
  };

  auto swap_basis = [&](std::size_t k, std::size_t kmax) {
    g.swap_rows(k, k - 1);
    swap_cols(g, k, k - 1);
    h.swap_rows(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
    Rat m = mu(k, k - 1);
    Rat b = bstar[k] + m * m * bstar[k - 1];
    mu(k, k - 1) = m * bstar[k - 1] / b;
    bstar[k] = bstar[k - 1] * bstar[k] / b;
    bstar[k - 1] = b;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Rat t = mu(i, k);
      mu(i, k) = mu(i, k - 1) - m * t;
      mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
    }
  };

  std::size_t k = 1;
  std::size_t kmax = 0;
  bstar[0] = g(0, 0);
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j < k; ++j) {
        Rat v = g(k, j);
        for (std::size_t i = 0; i < j; ++i) v -= mu(j, i) * mu(k, i) * bstar[i];
        mu(k, j) = v / bstar[j];
      }
      Rat b = g(k, k);
      for (std::size_t j = 0; j < k; ++j) b -= mu(k, j) * mu(k, j) * bstar[j];
      bstar[k] = b;
      if (b == 0) throw MathError("lll_gram: form is degenerate");
    }
    reduce(k, k - 1);
    if (bstar[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      swap_basis(k, kmax);
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
    ++k;
  }
  return res;
}

IntVec mul(const IntVec& x, const IntMat& m) {
  IntVec out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

RatVec mul(const RatVec& x, const RatMat& m) {
  RatVec out(m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace lorentz
