#include "latfill/matrix.hpp"

#include <algorithm>

namespace latfill {

IntMat mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMat transpose(const IntMat& a) {
  IntMat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Int bilinear(const IntVec& x, const IntMat& g, const IntVec& y) {
  if (int(x.size()) != g.rows() || int(y.size()) != g.cols())
    throw std::invalid_argument("bilinear: size mismatch");
  Int acc = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    Int rowacc = 0;
    for (int j = 0; j < g.cols(); ++j) rowacc += g(i, j) * y[j];
    acc += x[i] * rowacc;
  }
  return acc;
}

IntVec apply_left(const IntVec& x, const IntMat& g) {
  if (int(x.size()) != g.rows()) throw std::invalid_argument("apply_left: size mismatch");
  IntVec y(g.cols());
  for (int i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < g.cols(); ++j) y[j] += x[i] * g(i, j);
  }
  return y;
}

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  int n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

HnfResult hermite_normal_form(const IntMat& a) {
  IntMat m = a;
  int rows = m.rows(), cols = m.cols();
  int r = 0;  // next pivot row
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    for (int i = r + 1; i < rows; ++i) {
      while (m(i, c) != 0) {
        Xgcd x = xgcd(m(r, c), m(i, c));
        Int rc = m(r, c) / x.g, ic = m(i, c) / x.g;
        for (int j = 0; j < cols; ++j) {
          Int nr = x.s * m(r, j) + x.t * m(i, j);
          Int ni = rc * m(i, j) - ic * m(r, j);
          m(r, j) = nr;
          m(i, j) = ni;
        }
      }
    }
    if (m(r, c) < 0)
      for (int j = 0; j < cols; ++j) m(r, j) = -m(r, j);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(m(i, c), m(r, c));
      if (q != 0)
        for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  HnfResult res;
  res.rank = r;
  res.h = IntMat(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) res.h(i, j) = m(i, j);
  return res;
}

HnfTransform hermite_with_transform(const IntMat& a) {
  IntMat m = a;
  int rows = m.rows(), cols = m.cols();
  IntMat u = IntMat::identity(rows);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < std::max(cols, rows); ++j) {
        if (j < cols) std::swap(m(r, j), m(p, j));
        if (j < rows) std::swap(u(r, j), u(p, j));
      }
    for (int i = r + 1; i < rows; ++i) {
      while (m(i, c) != 0) {
        Xgcd x = xgcd(m(r, c), m(i, c));
        Int rc = m(r, c) / x.g, ic = m(i, c) / x.g;
        for (int j = 0; j < cols; ++j) {
          Int nr = x.s * m(r, j) + x.t * m(i, j);
          Int ni = rc * m(i, j) - ic * m(r, j);
          m(r, j) = nr;
          m(i, j) = ni;
        }
        for (int j = 0; j < rows; ++j) {
          Int nr = x.s * u(r, j) + x.t * u(i, j);
          Int ni = rc * u(i, j) - ic * u(r, j);
          u(r, j) = nr;
          u(i, j) = ni;
        }
      }
    }
    if (m(r, c) < 0) {
      for (int j = 0; j < cols; ++j) m(r, j) = -m(r, j);
      for (int j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(m(i, c), m(r, c));
      if (q != 0) {
        for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        for (int j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
      }
    }
    ++r;
  }
  return {std::move(m), std::move(u), r};
}

IntMat kernel_of_functional(const IntVec& c) {
  int n = int(c.size());
  IntMat u = IntMat::identity(n);
  IntVec w = c;
  // Unimodular row operations bringing w to (g, 0, ..., 0).
  if (w[0] == 0) {
    for (int i = 1; i < n; ++i)
      if (w[i] != 0) {
        std::swap(w[0], w[i]);
        for (int j = 0; j < n; ++j) std::swap(u(0, j), u(i, j));
        break;
      }
  }
  for (int i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    Xgcd x = xgcd(w[0], w[i]);
    Int a0 = w[0] / x.g, ai = w[i] / x.g;
    for (int j = 0; j < n; ++j) {
      Int n0 = x.s * u(0, j) + x.t * u(i, j);
      Int ni = a0 * u(i, j) - ai * u(0, j);
      u(0, j) = n0;
      u(i, j) = ni;
    }
    w[0] = x.g;
    w[i] = 0;
  }
  if (w[0] == 0) return hermite_normal_form(u).h;  // c == 0: kernel is everything
  IntMat k(n - 1, n);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i - 1, j) = u(i, j);
  return hermite_normal_form(k).h;
}

Int span_index(const IntMat& gens, int n) {
  HnfResult h = hermite_normal_form(gens);
  if (h.rank < n) return 0;
  Int idx = 1;
  for (int i = 0; i < n; ++i) idx *= h.h(i, i);
  return idx;
}

namespace {

// Exact Gauss-Jordan inverse over the rationals.
std::vector<RatVec> rational_inverse(const IntMat& a) {
  int n = a.rows();
  std::vector<RatVec> m(n, RatVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::invalid_argument("rational_inverse: singular matrix");
    std::swap(m[c], m[p]);
    Rat piv = m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

IntMat adjugate(const IntMat& a, const Int& deta) {
  if (deta == 0) throw std::invalid_argument("adjugate: singular matrix");
  int n = a.rows();
  auto inv = rational_inverse(a);
  IntMat adj(n, n);
  Rat d(deta);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x = inv[i][j] * d;
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("adjugate: non-integral entry");
      adj(i, j) = boost::multiprecision::numerator(x);
    }
  return adj;
}

IntMat inverse_unimodular(const IntMat& a) {
  Int d = det(a);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: matrix not unimodular");
  IntMat adj = adjugate(a, d);
  if (d == -1)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) adj(i, j) = -adj(i, j);
  return adj;
}

Signature signature_of(const IntMat& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("signature_of: not symmetric");
  int n = g.rows();
  std::vector<RatVec> m(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(g(i, j));
  std::vector<bool> done(n, false);
  Signature sig;
  int remaining = n;
  while (remaining > 0) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    if (p >= 0) {
      if (m[p][p] > 0)
        ++sig.positive;
      else
        ++sig.negative;
      done[p] = true;
      --remaining;
      for (int i = 0; i < n; ++i) {
        if (done[i] || m[i][p] == 0) continue;
        Rat f = m[i][p] / m[p][p];
        for (int j = 0; j < n; ++j)
          if (!done[j]) m[i][j] -= f * m[p][j];
      }
      continue;
    }
    // All remaining diagonal entries vanish. A nonzero off-diagonal pair
    // contributes one positive and one negative eigenvalue.
    int bi = -1, bj = -1;
    for (int i = 0; i < n && bi < 0; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j)
        if (!done[j] && m[i][j] != 0) {
          bi = i;
          bj = j;
          break;
        }
    }
    if (bi < 0) {
      sig.zero += remaining;
      return sig;
    }
    ++sig.positive;
    ++sig.negative;
    done[bi] = done[bj] = true;
    remaining -= 2;
    Rat a = m[bi][bj];
    for (int l = 0; l < n; ++l) {
      if (done[l]) continue;
      Rat ci = m[l][bi], cj = m[l][bj];
      if (ci == 0 && cj == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        m[l][k] -= (ci * m[bj][k] + cj * m[bi][k]) / a;
      }
    }
  }
  return sig;
}

}  // namespace latfill
