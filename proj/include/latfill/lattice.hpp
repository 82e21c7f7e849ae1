#pragma once

#include "latfill/matrix.hpp"

#include <optional>
#include <string>

namespace latfill {

// Integral lattice given by a symmetric Gram matrix. Immutable after
// construction; determinant and signature are computed once and cached.
class Lattice {
 public:
  Lattice() : gram_(0, 0) { init(); }
  explicit Lattice(IntMat gram, std::string name = "");

  int rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  const Int& det() const { return det_; }
  const Signature& signature() const { return sig_; }

  bool nondegenerate() const { return sig_.zero == 0; }
  bool positive_definite() const { return sig_.negative == 0 && sig_.zero == 0; }
  bool negative_definite() const { return sig_.positive == 0 && sig_.zero == 0; }

  Lattice with_name(std::string name) const {
    Lattice l = *this;
    l.name_ = std::move(name);
    return l;
  }

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  void init();

  IntMat gram_;
  std::string name_;
  Int det_;
  Signature sig_;
};

// Integer coordinate tuple with respect to a lattice basis.
struct LatticeVector {
  IntVec coords;
};

// Rational coordinate tuple with respect to a lattice basis.
struct Covector {
  RatVec coords;
};

Int norm_of(const Lattice& l, const IntVec& v);
Int pairing(const Lattice& l, const IntVec& v, const IntVec& w);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice negate(const Lattice& l);

// Orthogonal complement of v, with the sublattice basis that realizes it.
struct Sublattice {
  IntMat basis;  // rows: basis vectors in the coordinates of the ambient lattice
  Lattice lattice;
};
Sublattice complement_full(const Lattice& l, const IntVec& v);
Lattice complement(const Lattice& l, const IntVec& v);

// gcd of the pairings of v against the ambient lattice.
Int pairing_gcd(const Lattice& l, const IntVec& v);

// Pull a sublattice basis (rows in ambient coordinates) back to a Lattice.
Lattice sublattice_of(const Lattice& ambient, const IntMat& basis_rows);

// Change of basis: rows of u are the new basis in old coordinates (|det u| = 1).
Lattice change_basis(const Lattice& l, const IntMat& u);

// HNF basis (rows) of { x : all pairings of x with the lattice are
// divisible by d }, a full-rank sublattice.
IntMat pairings_divisible_sublattice(const Lattice& l, const Int& d);

// Exact pairwise reduction of sublattice basis rows against the ambient
// pairing; shrinks row norms without changing the spanned sublattice.
void reduce_basis_rows(IntMat& rows, const Lattice& ambient);

// Whether the rational tuple lies in the dual lattice (all pairings integral).
bool in_dual(const Lattice& l, const Covector& c);

}  // namespace latfill
