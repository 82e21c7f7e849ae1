#pragma once

#include "latfill/lattice.hpp"

#include <string>
#include <vector>

namespace latfill {

// Finitely supported non-increasing sequence V_0, V_1, ... of non-negative
// integers dropping by at most one per step; zero beyond the stored prefix.
struct VSequence {
  std::vector<long> values;  // trailing zeros trimmed

  long at(long i) const {
    if (i < 0) i = -i;
    return i < long(values.size()) ? values[i] : 0;
  }
  bool operator==(const VSequence& o) const = default;
};

bool v_sequence_valid(const VSequence& v);
bool v_sequence_admissible(const VSequence& v, long g4);
std::string v_sequence_string(const VSequence& v);

// All V-sequences allowed for slice genus at most g (g <= 4).
std::vector<VSequence> admissible_v_sequences(long g);

struct KnotSpec {
  std::string label;
  long g4_bound = 0;
  VSequence v_seq;
  std::vector<Lattice> base_fillings;  // reduced determinant-1 fillings at n = 1
};

const KnotSpec& knot_unknot();
const KnotSpec& knot_t23();
const KnotSpec& knot_t25();

KnotSpec make_knot_spec(std::string label, long g4, VSequence v,
                        std::vector<Lattice> base_fillings);

Rat d_unknot(long n, long i);
Rat d_surgery(const KnotSpec& spec, long n, long i);

// Reserved rational-surgery entry point; only q = 1 is implemented.
Rat d_surgery_rational(const KnotSpec& spec, long p, long q, long i);

struct DTable {
  long n = 0;
  std::vector<Rat> d;  // indexed by i = 0..n-1
};
DTable d_table(const KnotSpec& spec, long n);

Rat delta_y(const KnotSpec& spec, long n);

}  // namespace latfill
