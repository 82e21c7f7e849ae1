#include "latfill/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace latfill {

namespace {

// Fraction-free factorization of a positive definite form for exact pruning.
// With leading principal minors p_0 = 1, ..., p_r (in pivot order),
//   q(z) = sum_k (row[k] . z)^2 / (p_k p_{k+1}),  row[k][k] = p_{k+1}.
// Everything is scaled by P = prod_k p_k p_{k+1} so the search runs on integers.
struct QuadForm {
  int rank = 0;
  bool positive_definite = false;
  std::vector<int> order;        // level k -> original coordinate index
  std::vector<IntVec> row;       // row[k][j], level coordinates, j >= k
  IntVec weight;                 // P / (p_k p_{k+1})
  Int scale = 1;                 // P
};

QuadForm factor(const IntMat& s) {
  QuadForm f;
  int r = s.rows();
  f.rank = r;
  f.order.resize(r);
  for (int i = 0; i < r; ++i) f.order[i] = i;
  if (r == 0) {
    f.positive_definite = true;
    return f;
  }
  IntMat m = s;
  IntVec pivots(r + 1);
  pivots[0] = 1;
  for (int k = 0; k < r; ++k) {
    // Smallest positive diagonal first; large pivots end up outermost.
    int best = -1;
    for (int i = k; i < r; ++i)
      if (m(i, i) > 0 && (best < 0 || m(i, i) < m(best, best))) best = i;
    if (best < 0) return f;  // not positive definite
    if (best != k) {
      for (int j = 0; j < r; ++j) std::swap(m(k, j), m(best, j));
      for (int i = 0; i < r; ++i) std::swap(m(i, k), m(i, best));
      std::swap(f.order[k], f.order[best]);
    }
    pivots[k + 1] = m(k, k);
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / pivots[k];
  }
  // Rows are read only after the loop: later pivot swaps permute the
  // columns of earlier rows in place.
  f.row.assign(r, IntVec());
  for (int k = 0; k < r; ++k) {
    f.row[k].assign(r, Int(0));
    for (int j = k; j < r; ++j) f.row[k][j] = m(k, j);
  }
  f.positive_definite = true;
  for (int k = 0; k < r; ++k) f.scale *= pivots[k] * pivots[k + 1];
  f.weight.resize(r);
  for (int k = 0; k < r; ++k) f.weight[k] = f.scale / (pivots[k] * pivots[k + 1]);
  return f;
}

// Exact enumeration over the coset {z : z = coset (mod step)} of either all
// solutions of q(z) == target (exact mode) or the minimum of q (minimize mode).
// One representative per +-pair: the deepest nonzero level coordinate is > 0.
struct CosetSearch {
  const QuadForm& f;
  int step;
  IntVec coset;              // level coordinates, reduced mod step
  Int bound;                 // scaled: P * target (exact) or current best - 1
  bool minimize = false;
  std::function<void(const IntVec&)> emit;  // level coordinates
  IntVec best_z;
  Int best_scaled = -1;

  IntVec z;

  explicit CosetSearch(const QuadForm& qf) : f(qf) {}

  void run() {
    if (f.rank == 0) {
      if (minimize) {
        best_scaled = 0;
        best_z.clear();
      }
      return;
    }
    z.assign(f.rank, Int(0));
    dfs(f.rank - 1, 0, true);
  }

  // s_k = row[k][k]*z_k + t_k; contribution weight[k]*s_k^2.
  Int partial(int k) const {
    Int t = 0;
    for (int j = k + 1; j < f.rank; ++j)
      if (z[j] != 0) t += f.row[k][j] * z[j];
    return t;
  }

  void dfs(int k, const Int& acc, bool allzero) {
    const Int& pk = f.row[k][k];
    Int t = partial(k);
    Int rem = bound - acc;
    if (rem < 0) return;
    if (!minimize && k == 0) {
      // Innermost level: solve weight*(pk*z0 + t)^2 == rem exactly.
      if (rem % f.weight[0] != 0) return;
      Int s2 = rem / f.weight[0];
      Int s = isqrt_floor(s2);
      if (s * s != s2) return;
      for (int sg = 0; sg < (s == 0 ? 1 : 2); ++sg) {
        Int sv = sg == 0 ? s : -s;
        Int num = sv - t;
        if (num % pk != 0) continue;
        Int z0 = num / pk;
        if (pos_mod(z0 - coset[0], step) != 0) continue;
        if (allzero && z0 < 0) continue;
        if (allzero && z0 == 0) continue;  // zero vector never emitted
        z[0] = z0;
        emit(z);
        z[0] = 0;
      }
      return;
    }
    // Coset point nearest -t/pk, then walk outward on both sides.
    Int fl = floor_div(-t, pk);
    Int lo = fl - pos_mod(fl - coset[k], step);
    Int hi = lo + step;
    auto contrib = [&](const Int& zk) {
      Int s = pk * zk + t;
      return f.weight[k] * s * s;
    };
    bool lo_ok = !allzero || lo >= 0;
    while (true) {
      bool lo_open = lo_ok, hi_open = true;
      Int cl, ch;
      if (lo_open) {
        cl = contrib(lo);
        if (cl > bound - acc) lo_open = false;
      }
      ch = contrib(hi);
      if (ch > bound - acc) hi_open = false;
      if (!lo_open && !hi_open) {
        if (!lo_ok && contrib(lo) <= bound - acc) {
          // Negative side suppressed only by the +-pair normalization; the
          // positive side is exhausted, so nothing further remains.
        }
        break;
      }
      // Deterministic: prefer the smaller contribution, ties to the low side.
      bool take_lo = lo_open && (!hi_open || cl <= ch);
      Int zk = take_lo ? lo : hi;
      Int c = take_lo ? cl : ch;
      z[k] = zk;
      bool az = allzero && zk == 0;
      if (minimize && k == 0) {
        Int total = acc + c;
        if (best_scaled < 0 || total < best_scaled) {
          best_scaled = total;
          best_z = z;
          bound = total;  // keep ties so an optimum is retained; strict shrink below
          if (bound > 0) bound -= 1;
        }
      } else {
        dfs(k - 1, acc + c, az);
      }
      z[k] = 0;
      if (take_lo)
        lo -= step;
      else
        hi += step;
      if (allzero && lo < 0) lo_ok = false;
    }
  }
};

IntVec to_original(const QuadForm& f, const IntVec& level_z) {
  IntVec x(f.rank);
  for (int k = 0; k < f.rank; ++k) x[f.order[k]] = level_z[k];
  return x;
}

}  // namespace

NormSlice vectors_of_norm(const Lattice& l, const Int& n) {
  if (n <= 0) throw std::invalid_argument("vectors_of_norm: norm must be positive");
  QuadForm f = factor(l.gram());
  if (!f.positive_definite) throw std::invalid_argument("vectors_of_norm: lattice not positive definite");
  NormSlice slice{l, n, {}};
  if (l.rank() == 0) return slice;
  CosetSearch search(f);
  search.step = 1;
  search.coset.assign(l.rank(), Int(0));
  search.bound = f.scale * n;
  search.emit = [&](const IntVec& z) {
    IntVec v = to_original(f, z);
    IntVec w = negated(v);
    slice.vectors.push_back(lex_less(v, w) ? std::move(v) : std::move(w));
  };
  search.run();
  std::sort(slice.vectors.begin(), slice.vectors.end(), lex_less);
  return slice;
}

NormSlice vectors_of_norm_divisible(const Lattice& l, const Int& n, const Int& d) {
  if (d == 1) return vectors_of_norm(l, n);
  NormSlice out{l, n, {}};
  if (l.rank() == 0) return out;
  IntMat sub = pairings_divisible_sublattice(l, d);
  reduce_basis_rows(sub, l);
  Lattice sl = sublattice_of(l, sub);
  NormSlice inner = vectors_of_norm(sl, n);
  for (const IntVec& u : inner.vectors) {
    IntVec v = apply_left(u, sub);
    IntVec w = negated(v);
    out.vectors.push_back(lex_less(v, w) ? std::move(v) : std::move(w));
  }
  std::sort(out.vectors.begin(), out.vectors.end(), lex_less);
  return out;
}

std::vector<std::size_t> norm_pair_counts(const Lattice& l, const Int& max_norm) {
  std::vector<std::size_t> counts;
  counts.push_back(0);
  for (Int n = 1; n <= max_norm; ++n) counts.push_back(vectors_of_norm(l, n).vectors.size());
  return counts;
}

ReducedPart reduced_part(const Lattice& l) {
  if (!l.positive_definite() && l.rank() > 0)
    throw std::invalid_argument("reduced_part: lattice not positive definite");
  Lattice cur = l;
  int k = 0;
  while (cur.rank() > 0) {
    NormSlice units = vectors_of_norm(cur, 1);
    if (units.vectors.empty()) break;
    cur = complement(cur, units.vectors.front());
    ++k;
  }
  return {k, cur};
}

CharCoset char_coset(const Lattice& l) {
  if (!l.nondegenerate()) throw std::invalid_argument("char_coset: degenerate lattice");
  int r = l.rank();
  // Solve gram * c == diag(gram) over GF(2); a solution always exists for
  // symmetric matrices.
  std::vector<std::vector<int>> m(r, std::vector<int>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = int(pos_mod(l.gram()(i, j), 2).convert_to<int>());
    m[i][r] = int(pos_mod(l.gram()(i, i), 2).convert_to<int>());
  }
  std::vector<int> pivot_col(r, -1);
  int rr = 0;
  for (int c = 0; c < r && rr < r; ++c) {
    int p = -1;
    for (int i = rr; i < r; ++i)
      if (m[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rr], m[p]);
    for (int i = 0; i < r; ++i)
      if (i != rr && m[i][c])
        for (int j = c; j <= r; ++j) m[i][j] ^= m[rr][j];
    pivot_col[rr] = c;
    ++rr;
  }
  IntVec c(r, Int(0));
  for (int i = 0; i < rr; ++i) c[pivot_col[i]] = m[i][r];
  for (int i = rr; i < r; ++i)
    if (m[i][r]) throw std::logic_error("char_coset: no characteristic vector");
  Covector base;
  base.coords.resize(r);
  for (int i = 0; i < r; ++i) base.coords[i] = Rat(c[i]);
  return {l, base};
}

Int min_quadratic_on_parity_coset(const IntMat& a, const std::vector<int>& parity) {
  QuadForm f = factor(a);
  if (!f.positive_definite)
    throw std::invalid_argument("min_quadratic_on_parity_coset: form not positive definite");
  int r = a.rows();
  if (r == 0) return 0;
  IntVec d(r);
  for (int i = 0; i < r; ++i) d[i] = parity[i] ? 1 : 0;
  Int q0 = quadratic(a, d);
  // Cheap descent from the parity representative tightens the initial bound.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < r; ++i) {
      for (int sgn : {2, -2}) {
        IntVec e = d;
        e[i] += sgn;
        Int q = quadratic(a, e);
        if (q < q0) {
          q0 = q;
          d = e;
          improved = true;
        }
      }
    }
  }
  CosetSearch search(f);
  search.step = 2;
  search.minimize = true;
  search.coset.resize(r);
  for (int k = 0; k < r; ++k) search.coset[k] = parity[f.order[k]] ? 1 : 0;
  search.bound = f.scale * q0;
  search.best_scaled = f.scale * q0;
  search.emit = [](const IntVec&) {};
  search.run();
  Int best = search.best_scaled;
  if (best % f.scale != 0) throw std::logic_error("min_quadratic_on_parity_coset: scale mismatch");
  return best / f.scale;
}

Rat delta_lattice(const Lattice& l) {
  if (l.rank() == 0) return Rat(0);
  if (!l.positive_definite())
    throw std::invalid_argument("delta_lattice: lattice not positive definite");
  IntMat adj = adjugate(l.gram(), l.det());
  std::vector<int> parity(l.rank());
  for (int i = 0; i < l.rank(); ++i) parity[i] = int(pos_mod(l.gram()(i, i), 2).convert_to<int>());
  Int qmin = min_quadratic_on_parity_coset(adj, parity);
  return Rat(l.rank()) - Rat(qmin, l.det());
}

bool is_even(const Lattice& l) {
  for (int i = 0; i < l.rank(); ++i)
    if (pos_mod(l.gram()(i, i), 2) != 0) return false;
  return true;
}

}  // namespace latfill
