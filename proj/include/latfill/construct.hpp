#pragma once

#include "latfill/classify.hpp"

#include <string>
#include <vector>

namespace latfill {

struct PlumbingGraph {
  std::vector<Int> weights;                 // vertex id -> weight
  std::vector<std::pair<int, int>> edges;   // unordered id pairs, no loops/multi-edges
};

Lattice plumbing_gram(const PlumbingGraph& g);

// Reduced fractions numerator/denominator with denominator > 0.
struct SeifertData {
  Int b;
  std::vector<std::pair<Int, Int>> fractions;  // (b_i, a_i)
};

Rat euler_number(const SeifertData& s);
SeifertData parse_seifert(const std::string& text);  // "b; b1/a1, b2/a2, ..."

// Continued fraction a/b = t1 - 1/(t2 - 1/(...)) by the greedy ceiling rule.
std::vector<Int> hj_expansion(const Int& a, const Int& b);
Rat hj_evaluate(const std::vector<Int>& ts);

// Star-shaped plumbing with central weight b and one leg per fraction.
// Fractions are first normalized mod 1 into [0,1); a resulting weight-0
// center of valence <= 2 is removed by the standard chain absorption.
PlumbingGraph seifert_plumbing(const SeifertData& s);

// Class c_h*h - sum c_i e_i in the odd unimodular lattice I(1,k).
struct BlowupClass {
  Int h;
  IntVec e;
};
LatticeVector blowup_class(const BlowupClass& c);
Lattice blowup_ambient(const BlowupClass& c);  // I(1, |e|)

enum class Family { T, C, E, A, D, Double3, Double21 };
Family parse_family(const std::string& s);
std::string family_name(Family f);

struct IdentityReport {
  Family family;
  long n = 0;
  std::string ambient;
  IntVec vector;
  std::string expected;     // name of the positive definite comparison lattice
  int rank = 0;
  Int det;                  // |det| of the complement
  std::string root_type;    // ADE decomposition of the negated complement
  bool checked_isomorphism = false;
  bool isomorphic = false;
  bool passed = false;
  Lattice complement_negated;
};

// Complement identities inside I(1,k) for the catalog families.
IdentityReport verify_identity(Family family, long n);

// Doubling identities for a square-one class v in I(1,k):
//   (2v - e_{k+1})^perp in I(1,k+1)         ~= comp(v) + <-3>
//   (2v - e_{k+1} - e_{k+2})^perp in I(1,k+2) ~= comp(v) + <-2> + <-1>
bool verify_double(const BlowupClass& v, bool two_units);

}  // namespace latfill
