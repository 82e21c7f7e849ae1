#pragma once

#include "latfill/enumerate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latfill {

// Catalog name grammar: A4, D5, E8, T3, C7, Gamma12, diag(1,1,2),
// Lambda(2,4), I(1,9), empty, and '+'-separated sums.
struct NameTerm {
  enum class Kind { A, D, E, T, C, Gamma12, Diag, Lambda, I, Empty };
  Kind kind;
  long n = 0;        // A/D/E/T/C parameter
  long a = 0, b = 0; // I(a,b)
  std::vector<Int> list;  // diag / Lambda entries

  static NameTerm simple(Kind k, long n = 0) {
    NameTerm t;
    t.kind = k;
    t.n = n;
    return t;
  }
};

using LatticeName = std::vector<NameTerm>;

Lattice make(const LatticeName& name);
Lattice make(const NameTerm& term);
LatticeName parse_name(const std::string& text);
std::string name_to_string(const LatticeName& name);

// Unimodular row basis whose Gram has small diagonal; improves search bases.
struct ShortBasis {
  IntMat basis;   // rows, in the original coordinates
  Lattice lattice;
};
ShortBasis shorten_basis(const Lattice& l);

inline constexpr int kIsomorphismRankLimit = 17;

// Exact isometry test for positive definite lattices of rank <= 17.
// On success the witness m satisfies m * gram2 * m^T = gram1.
struct IsoResult {
  bool isomorphic = false;
  IntMat witness;
};
IsoResult is_isomorphic(const Lattice& l1, const Lattice& l2);
bool isomorphic(const Lattice& l1, const Lattice& l2);

// ADE decomposition of the sublattice generated by the roots of the
// reduced part.
struct RootComponent {
  NameTerm::Kind kind;  // A, D or E
  int n;
};
struct RootDecomposition {
  std::vector<RootComponent> components;
  int covered_rank = 0;
};
RootDecomposition root_decomposition(const Lattice& l);
std::string root_decomposition_string(const RootDecomposition& d);

// A catalog name whose make() is isomorphic to l, if one is found.
std::optional<LatticeName> recognize(const Lattice& l);

// Display-only annotation rows for reduced indecomposable lattices of low
// rank and determinant.
std::vector<std::string> catalog_annotation(int rank, const Int& det);

}  // namespace latfill
