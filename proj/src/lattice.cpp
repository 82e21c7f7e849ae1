#include "latfill/lattice.hpp"

namespace latfill {

Lattice::Lattice(IntMat gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Lattice: gram not square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: gram not symmetric");
  init();
}

void Lattice::init() {
  det_ = latfill::det(gram_);
  sig_ = signature_of(gram_);
}

Int norm_of(const Lattice& l, const IntVec& v) {
  if (int(v.size()) != l.rank()) throw std::invalid_argument("norm_of: length mismatch");
  return quadratic(l.gram(), v);
}

Int pairing(const Lattice& l, const IntVec& v, const IntVec& w) { return bilinear(v, l.gram(), w); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  IntMat g(a.rank() + b.rank(), a.rank() + b.rank());
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  std::string name;
  if (!a.name().empty() && !b.name().empty())
    name = a.rank() == 0 ? b.name() : (b.rank() == 0 ? a.name() : a.name() + " + " + b.name());
  return Lattice(std::move(g), std::move(name));
}

Lattice negate(const Lattice& l) {
  IntMat g = l.gram();
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  return Lattice(std::move(g));
}

Sublattice complement_full(const Lattice& l, const IntVec& v) {
  if (int(v.size()) != l.rank()) throw std::invalid_argument("complement: length mismatch");
  if (is_zero(v)) throw std::invalid_argument("complement: zero vector");
  if (!l.nondegenerate()) throw std::invalid_argument("complement: degenerate lattice");
  IntVec pairings = apply_left(v, l.gram());
  IntMat basis = kernel_of_functional(pairings);
  return {basis, sublattice_of(l, basis)};
}

Lattice complement(const Lattice& l, const IntVec& v) { return complement_full(l, v).lattice; }

Int pairing_gcd(const Lattice& l, const IntVec& v) {
  if (is_zero(v)) throw std::invalid_argument("pairing_gcd: zero vector");
  IntVec p = apply_left(v, l.gram());
  Int g = 0;
  for (const Int& x : p) g = int_gcd(g, x);
  return g;
}

Lattice sublattice_of(const Lattice& ambient, const IntMat& basis_rows) {
  if (basis_rows.cols() != ambient.rank())
    throw std::invalid_argument("sublattice_of: width mismatch");
  IntMat g = mul(mul(basis_rows, ambient.gram()), transpose(basis_rows));
  return Lattice(std::move(g));
}

Lattice change_basis(const Lattice& l, const IntMat& u) {
  Int d = det(u);
  if (d != 1 && d != -1) throw std::invalid_argument("change_basis: matrix not unimodular");
  return sublattice_of(l, u);
}

IntMat pairings_divisible_sublattice(const Lattice& l, const Int& d) {
  if (d <= 0) throw std::invalid_argument("pairings_divisible_sublattice: d must be positive");
  if (!l.nondegenerate()) throw std::invalid_argument("pairings_divisible_sublattice: degenerate");
  int r = l.rank();
  // x satisfies G x = d y for some integer y; rows (x, y) with (x,y)*W = 0,
  // W stacking G over d*I, project to x.
  IntMat w(2 * r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) w(i, j) = l.gram()(i, j);
  for (int i = 0; i < r; ++i) w(r + i, i) = d;
  HnfTransform ht = hermite_with_transform(w);
  std::vector<IntVec> basis;
  for (int i = ht.rank; i < 2 * r; ++i) {
    IntVec x(r);
    for (int j = 0; j < r; ++j) x[j] = ht.u(i, j);
    basis.push_back(std::move(x));
  }
  IntMat rows(int(basis.size()), r);
  for (int i = 0; i < int(basis.size()); ++i) rows.set_row(i, basis[i]);
  HnfResult h = hermite_normal_form(rows);
  if (h.rank != r) throw std::logic_error("pairings_divisible_sublattice: rank defect");
  return h.h;
}

void reduce_basis_rows(IntMat& rows, const Lattice& ambient) {
  int m = rows.rows();
  if (m == 0) return;
  IntMat g = mul(mul(rows, ambient.gram()), transpose(rows));
  bool changed = true;
  for (int pass = 0; changed && pass < 200; ++pass) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j || g(j, j) == 0) continue;
        // Nearest integer to g(i,j)/g(j,j); row_i -= t * row_j.
        Int t = floor_div(2 * g(i, j) + g(j, j), 2 * g(j, j));
        if (t == 0) continue;
        for (int c = 0; c < rows.cols(); ++c) rows(i, c) -= t * rows(j, c);
        for (int c = 0; c < m; ++c) {
          g(i, c) -= t * g(j, c);
          g(c, i) = g(i, c);
        }
        g(i, i) = quadratic(ambient.gram(), rows.row(i));
        changed = true;
      }
    }
  }
}

bool in_dual(const Lattice& l, const Covector& c) {
  if (int(c.coords.size()) != l.rank()) return false;
  for (int j = 0; j < l.rank(); ++j) {
    Rat acc = 0;
    for (int i = 0; i < l.rank(); ++i) acc += c.coords[i] * Rat(l.gram()(i, j));
    if (boost::multiprecision::denominator(acc) != 1) return false;
  }
  return true;
}

}  // namespace latfill
