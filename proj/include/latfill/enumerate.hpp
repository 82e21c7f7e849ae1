#pragma once

#include "latfill/lattice.hpp"

#include <vector>

namespace latfill {

// All vectors of a given norm, one representative per {v, -v} pair
// (the lexicographically smaller one), sorted lexicographically.
struct NormSlice {
  Lattice lattice;
  Int norm;
  std::vector<IntVec> vectors;
};

NormSlice vectors_of_norm(const Lattice& l, const Int& n);

// Vectors of norm n whose pairings with the whole lattice are all divisible
// by d; enumerated inside the corresponding finite-index sublattice.
NormSlice vectors_of_norm_divisible(const Lattice& l, const Int& n, const Int& d);

// Number of +-pairs per norm 1..max_norm (index 0 unused).
std::vector<std::size_t> norm_pair_counts(const Lattice& l, const Int& max_norm);

// L = L' + <1>^k with L' reduced (no norm-1 vectors).
struct ReducedPart {
  int unit_count = 0;
  Lattice reduced;
};
ReducedPart reduced_part(const Lattice& l);

// One characteristic covector; the full set is base + 2L*.
struct CharCoset {
  Lattice lattice;
  Covector base;
};
CharCoset char_coset(const Lattice& l);

// rank(L) minus the minimal squared norm over characteristic covectors.
Rat delta_lattice(const Lattice& l);

bool is_even(const Lattice& l);

// Minimal value of z^T A z over integer z congruent to `parity` mod 2
// (A positive definite). Exposed for tests.
Int min_quadratic_on_parity_coset(const IntMat& a, const std::vector<int>& parity);

}  // namespace latfill
