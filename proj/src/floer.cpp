#include "latfill/floer.hpp"

#include "latfill/classify.hpp"

#include <algorithm>
#include <sstream>

namespace latfill {

bool v_sequence_valid(const VSequence& v) {
  long prev = -1;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    long x = v.values[i];
    if (x < 0) return false;
    if (i > 0 && (x > prev || x < prev - 1)) return false;
    prev = x;
  }
  if (!v.values.empty() && v.values.back() == 0) return false;  // not trimmed
  return true;
}

bool v_sequence_admissible(const VSequence& v, long g4) {
  if (!v_sequence_valid(v)) return false;
  for (long i = 0; i < long(v.values.size()); ++i) {
    if (i >= g4) {
      if (v.at(i) != 0) return false;
    } else {
      long bound = (g4 - i + 1) / 2;  // ceil((g4 - i) / 2)
      if (v.at(i) > bound) return false;
    }
  }
  return true;
}

std::string v_sequence_string(const VSequence& v) {
  if (v.values.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.values.size(); ++i) os << (i ? "," : "") << v.values[i];
  return os.str();
}

std::vector<VSequence> admissible_v_sequences(long g) {
  if (g < 0 || g > 4) throw std::invalid_argument("admissible_v_sequences: need 0 <= g <= 4");
  std::vector<VSequence> out;
  std::vector<long> cur;
  // Values are fixed to zero from index g on; choose V_0..V_{g-1}.
  auto rec = [&](auto&& self, long i) -> void {
    if (i == g) {
      std::vector<long> trimmed = cur;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      VSequence v{trimmed};
      if (v_sequence_admissible(v, g) && std::find(out.begin(), out.end(), v) == out.end())
        out.push_back(v);
      return;
    }
    long hi = (g - i + 1) / 2;
    long lo = 0;
    if (i > 0) {
      hi = std::min(hi, cur[i - 1]);
      lo = std::max(lo, cur[i - 1] - 1);
    }
    if (i + 1 > g) lo = 0;
    for (long x = lo; x <= hi; ++x) {
      cur.push_back(x);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  if (g == 0) {
    out.push_back(VSequence{});
  } else {
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(), [](const VSequence& a, const VSequence& b) {
    if (a.values.size() != b.values.size()) return a.values.size() < b.values.size();
    return a.values < b.values;
  });
  return out;
}

namespace {

KnotSpec builtin(const char* label, long g4, std::vector<long> v,
                 std::vector<LatticeName> bases) {
  KnotSpec s;
  s.label = label;
  s.g4_bound = g4;
  s.v_seq = VSequence{std::move(v)};
  for (const auto& n : bases) s.base_fillings.push_back(make(n));
  return s;
}

}  // namespace

const KnotSpec& knot_unknot() {
  static const KnotSpec s = builtin("U", 0, {}, {{NameTerm::simple(NameTerm::Kind::Empty)}});
  return s;
}

const KnotSpec& knot_t23() {
  static const KnotSpec s = builtin("T23", 1, {1},
                                    {{NameTerm::simple(NameTerm::Kind::Empty)},
                                     {NameTerm::simple(NameTerm::Kind::E, 8)}});
  return s;
}

const KnotSpec& knot_t25() {
  static const KnotSpec s = builtin("T25", 2, {1, 1},
                                    {{NameTerm::simple(NameTerm::Kind::Empty)},
                                     {NameTerm::simple(NameTerm::Kind::E, 8)},
                                     {NameTerm::simple(NameTerm::Kind::Gamma12)}});
  return s;
}

KnotSpec make_knot_spec(std::string label, long g4, VSequence v,
                        std::vector<Lattice> base_fillings) {
  if (!v_sequence_admissible(v, g4))
    throw std::invalid_argument("make_knot_spec: V-sequence not admissible for g4 bound");
  for (const Lattice& l : base_fillings) {
    if (!l.positive_definite() || l.det() != 1)
      throw std::invalid_argument("make_knot_spec: base fillings must be positive definite with det 1");
    if (l.rank() > 0 && !vectors_of_norm(l, 1).vectors.empty())
      throw std::invalid_argument("make_knot_spec: base fillings must be reduced");
  }
  KnotSpec s;
  s.label = std::move(label);
  s.g4_bound = g4;
  s.v_seq = std::move(v);
  s.base_fillings = std::move(base_fillings);
  return s;
}

Rat d_unknot(long n, long i) {
  if (n < 1) throw std::invalid_argument("d_unknot: n must be positive");
  if (i < 0 || i >= n) throw std::invalid_argument("d_unknot: index out of range");
  Int num = Int(2 * i - n) * Int(2 * i - n) - n;
  return Rat(num, Int(4) * n);
}

Rat d_surgery(const KnotSpec& spec, long n, long i) {
  if (n < 1) throw std::invalid_argument("d_surgery: n must be positive");
  if (i < 0 || i >= n) throw std::invalid_argument("d_surgery: index out of range");
  long v = std::max(spec.v_seq.at(i), spec.v_seq.at(n - i));
  return Rat(-2 * v) + d_unknot(n, i);
}

Rat d_surgery_rational(const KnotSpec& spec, long p, long q, long i) {
  if (q == 1) return d_surgery(spec, p, i);
  throw NotImplementedError("d_surgery_rational: only integer surgery (q = 1) is implemented");
}

DTable d_table(const KnotSpec& spec, long n) {
  DTable t;
  t.n = n;
  for (long i = 0; i < n; ++i) t.d.push_back(d_surgery(spec, n, i));
  return t;
}

Rat delta_y(const KnotSpec& spec, long n) {
  if (n < 1) throw std::invalid_argument("delta_y: n must be positive");
  Rat best;
  bool first = true;
  for (long i = 0; i < n; ++i) {
    Rat v = Rat(-4) * d_surgery(spec, n, i);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace latfill
