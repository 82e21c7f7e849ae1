#pragma once

#include "latfill/classify.hpp"
#include "latfill/floer.hpp"

#include <map>

namespace latfill {

// Mod-8 characteristic-vector obstruction for an even reduced lattice to fill
// without any <1> summand.
enum class RokhlinResult { Unconstrained, ExcludedBare };
RokhlinResult rokhlin_obstruction(const Lattice& reduced, long n);

struct FillingEntry {
  Lattice reduced;
  bool survived_delta = true;
  bool survived_rokhlin = true;        // never used to discard; audit value
  bool needs_unit_padding = false;     // fills only with at least one <1> summand
  Rat delta;                           // delta of the reduced lattice
};

struct FillingTable {
  KnotSpec spec;
  std::map<long, std::vector<FillingEntry>> rows;
};

// Vectors v in reduced + <1>^padding with v^2 = n(n-1) and pairing gcd n-1,
// one representative per class of unit-coordinate permutations and sign flips.
std::vector<IntVec> candidate_vectors(const Lattice& reduced, long n, int padding = 2);

// One induction step: all reduced complements of determinant n arising from
// the previous row, delta-filtered and deduplicated up to isomorphism.
std::vector<FillingEntry> step(const KnotSpec& spec, long n,
                               const std::vector<Lattice>& prev_row);

FillingTable classify_fillings(const KnotSpec& spec, long n_max);

}  // namespace latfill
