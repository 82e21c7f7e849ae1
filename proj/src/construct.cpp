#include "latfill/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latfill {

Lattice plumbing_gram(const PlumbingGraph& g) {
  int n = int(g.weights.size());
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = g.weights[i];
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("plumbing_gram: bad edge");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) throw std::invalid_argument("plumbing_gram: multi-edge");
    m(a, b) = -1;
    m(b, a) = -1;
  }
  return Lattice(std::move(m));
}

Rat euler_number(const SeifertData& s) {
  Rat e(s.b);
  for (const auto& [bi, ai] : s.fractions) e -= Rat(bi, ai);
  return e;
}

SeifertData parse_seifert(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("seifert data: expected 'b; b1/a1, ...'");
  SeifertData s;
  auto trim = [](std::string t) {
    std::size_t a = t.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    std::size_t b = t.find_last_not_of(" \t");
    return t.substr(a, b - a + 1);
  };
  try {
    s.b = Int(trim(text.substr(0, semi)));
  } catch (...) {
    throw std::invalid_argument("seifert data: bad central weight");
  }
  std::string rest = text.substr(semi + 1);
  std::string cur;
  for (char c : rest + ",") {
    if (c != ',') {
      cur += c;
      continue;
    }
    std::string tok = trim(cur);
    cur.clear();
    if (tok.empty()) continue;
    auto slash = tok.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("seifert data: fraction expected");
    Int num, den;
    try {
      num = Int(trim(tok.substr(0, slash)));
      den = Int(trim(tok.substr(slash + 1)));
    } catch (...) {
      throw std::invalid_argument("seifert data: bad fraction '" + tok + "'");
    }
    if (den == 0) throw std::invalid_argument("seifert data: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (int_gcd(abs(num), den) != 1) throw std::invalid_argument("seifert data: fraction not reduced");
    s.fractions.push_back({num, den});
  }
  return s;
}

std::vector<Int> hj_expansion(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("hj_expansion: zero denominator");
  if (a <= 0) throw std::invalid_argument("hj_expansion: numerator must be positive");
  if (int_gcd(a, abs(b)) != 1) throw std::invalid_argument("hj_expansion: fraction not reduced");
  // q = t - 1/q' with t = ceil(q).
  Rat q(a, b);
  std::vector<Int> ts;
  while (true) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    Int t = -floor_div(-num, den);  // ceil
    ts.push_back(t);
    Rat rem = Rat(t) - q;
    if (rem == 0) break;
    q = Rat(1) / rem;
  }
  return ts;
}

Rat hj_evaluate(const std::vector<Int>& ts) {
  if (ts.empty()) throw std::invalid_argument("hj_evaluate: empty expansion");
  Rat acc(ts.back());
  for (int i = int(ts.size()) - 2; i >= 0; --i) {
    if (acc == 0) throw std::invalid_argument("hj_evaluate: division by zero");
    acc = Rat(ts[i]) - Rat(1) / acc;
  }
  return acc;
}

namespace {

void absorb_zero_vertices(PlumbingGraph& g) {
  while (true) {
    int z = -1;
    std::vector<int> nbrs;
    for (int i = 0; i < int(g.weights.size()) && z < 0; ++i) {
      if (g.weights[i] != 0) continue;
      nbrs.clear();
      for (auto [a, b] : g.edges) {
        if (a == i) nbrs.push_back(b);
        if (b == i) nbrs.push_back(a);
      }
      if (nbrs.size() <= 2) z = i;
    }
    if (z < 0) return;
    std::vector<int> keep_map(g.weights.size(), -1);
    PlumbingGraph out;
    if (nbrs.empty()) throw std::invalid_argument("seifert_plumbing: isolated zero vertex");
    if (nbrs.size() == 1) {
      // Chain tail [.., x, a, 0] reduces to [.., x].
      int a = nbrs[0];
      for (int i = 0; i < int(g.weights.size()); ++i) {
        if (i == z || i == a) continue;
        keep_map[i] = int(out.weights.size());
        out.weights.push_back(g.weights[i]);
      }
      for (auto [x, y] : g.edges)
        if (keep_map[x] >= 0 && keep_map[y] >= 0) out.edges.push_back({keep_map[x], keep_map[y]});
    } else {
      // Valence-2 zero vertex: fuse the two neighbours.
      int a = nbrs[0], b = nbrs[1];
      bool adjacent = false;
      for (auto [x, y] : g.edges)
        if ((x == a && y == b) || (x == b && y == a)) adjacent = true;
      if (adjacent) return;  // absorption would create a loop; leave as is
      int fused = 0;
      for (int i = 0; i < int(g.weights.size()); ++i) {
        if (i == z || i == b) continue;
        keep_map[i] = int(out.weights.size());
        if (i == a) {
          fused = keep_map[i];
          out.weights.push_back(g.weights[a] + g.weights[b]);
        } else {
          out.weights.push_back(g.weights[i]);
        }
      }
      std::set<std::pair<int, int>> edges;
      for (auto [x, y] : g.edges) {
        if (x == z || y == z) continue;
        int nx = x == b ? fused : keep_map[x];
        int ny = y == b ? fused : keep_map[y];
        if (nx == ny) continue;
        edges.insert(std::minmax(nx, ny));
      }
      out.edges.assign(edges.begin(), edges.end());
    }
    g = std::move(out);
  }
}

}  // namespace

PlumbingGraph seifert_plumbing(const SeifertData& s) {
  // Normalize each fraction into [0,1); the integer parts move to the center.
  Int center = s.b;
  std::vector<std::pair<Int, Int>> legs;
  for (const auto& [bi, ai] : s.fractions) {
    Int k = floor_div(bi, ai);
    Int nb = bi - k * ai;
    center -= k;
    if (nb != 0) legs.push_back({nb, ai});
  }
  PlumbingGraph g;
  g.weights.push_back(center);
  for (const auto& [nb, ai] : legs) {
    std::vector<Int> ts = hj_expansion(ai, nb);
    int prev = 0;
    for (const Int& t : ts) {
      g.weights.push_back(t);
      int id = int(g.weights.size()) - 1;
      g.edges.push_back({prev, id});
      prev = id;
    }
  }
  absorb_zero_vertices(g);
  return g;
}

LatticeVector blowup_class(const BlowupClass& c) {
  LatticeVector v;
  v.coords.push_back(c.h);
  for (const Int& e : c.e) v.coords.push_back(-e);
  return v;
}

Lattice blowup_ambient(const BlowupClass& c) {
  NameTerm t;
  t.kind = NameTerm::Kind::I;
  t.a = 1;
  t.b = long(c.e.size());
  return make(t);
}

Family parse_family(const std::string& s) {
  if (s == "T") return Family::T;
  if (s == "C") return Family::C;
  if (s == "E") return Family::E;
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "double3") return Family::Double3;
  if (s == "double21") return Family::Double21;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::C: return "C";
    case Family::E: return "E";
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::Double3: return "double3";
    case Family::Double21: return "double21";
  }
  return "?";
}

namespace {

BlowupClass family_class(Family family, long n) {
  BlowupClass c;
  auto fill = [&](long count, long coeff) {
    for (long i = 0; i < count; ++i) c.e.push_back(Int(coeff));
  };
  switch (family) {
    case Family::T:
      if (n < 1 || n > 8) throw std::invalid_argument("family T: need 1 <= n <= 8");
      c.h = 3;
      fill(9 - n, 1);
      break;
    case Family::C:
      if (n < 1 || n > 11) throw std::invalid_argument("family C: need 1 <= n <= 11");
      c.h = 4;
      fill(1, 2);
      fill(12 - n, 1);
      break;
    case Family::E:
      if (n < 1 || n > 7) throw std::invalid_argument("family E: need 1 <= n <= 7");
      c.h = 6;
      fill(7, 2);
      fill(8 - n, 1);
      break;
    case Family::A:
      if (n < 1 || n > 15) throw std::invalid_argument("family A: need 1 <= n <= 15");
      c.h = 4;
      fill(16 - n, 1);
      break;
    case Family::D:
      if (n < 1 || n > 7) throw std::invalid_argument("family D: need 1 <= n <= 7");
      c.h = 8;
      c.e.push_back(4);
      c.e.push_back(3);
      fill(8, 2);
      fill(6 - (n - 1), 1);
      break;
    default: throw std::invalid_argument("family_class: doubling families take a base class");
  }
  return c;
}

std::string expected_name(Family family, long n) {
  switch (family) {
    case Family::T: return "T" + std::to_string(n);
    case Family::C: return "C" + std::to_string(n);
    default: return "";
  }
}

}  // namespace

IdentityReport verify_identity(Family family, long n) {
  IdentityReport rep;
  rep.family = family;
  rep.n = n;
  if (family == Family::Double3 || family == Family::Double21) {
    // Canonical base: the square-one class 3h - e1 - ... - e8.
    BlowupClass base;
    base.h = 3;
    base.e.assign(8, Int(1));
    bool two = family == Family::Double21;
    rep.ambient = two ? "I(1,10)" : "I(1,9)";
    rep.expected = two ? "E8 + diag(2,1)" : "E8 + diag(3)";
    rep.checked_isomorphism = true;
    rep.isomorphic = verify_double(base, two);
    rep.passed = rep.isomorphic;
    return rep;
  }
  BlowupClass c = family_class(family, n);
  Lattice ambient = blowup_ambient(c);
  rep.ambient = ambient.name();
  rep.vector = blowup_class(c).coords;
  Lattice comp = complement(ambient, rep.vector);
  Lattice neg = negate(comp);
  rep.complement_negated = neg;
  rep.rank = neg.rank();
  rep.det = abs(neg.det());
  rep.passed = rep.rank == ambient.rank() - 1 && rep.det == n;
  std::string exp = expected_name(family, n);
  if (!exp.empty()) {
    rep.expected = exp;
    rep.checked_isomorphism = true;
    rep.isomorphic = isomorphic(neg, make(parse_name(exp)));
    rep.passed = rep.passed && rep.isomorphic;
  } else if (n == 1) {
    switch (family) {
      case Family::E: rep.expected = "roots E7 + E7"; break;
      case Family::A: rep.expected = "roots A15"; break;
      default: rep.expected = "roots D8 + D8"; break;
    }
  }
  rep.root_type = root_decomposition_string(root_decomposition(neg));
  if (n == 1 && !rep.checked_isomorphism) {
    std::string want = family == Family::E   ? "E7 + E7"
                       : family == Family::A ? "A15"
                                             : "D8 + D8";
    rep.passed = rep.passed && rep.root_type == want;
  }
  return rep;
}

bool verify_double(const BlowupClass& v, bool two_units) {
  Lattice ambient = blowup_ambient(v);
  IntVec vc = blowup_class(v).coords;
  if (quadratic(ambient.gram(), vc) != 1)
    throw std::invalid_argument("verify_double: class must have square one");
  Lattice lam_neg = negate(complement(ambient, vc));
  int k = int(v.e.size());
  int extra = two_units ? 2 : 1;
  BlowupClass w;
  w.h = 2 * v.h;
  for (const Int& e : v.e) w.e.push_back(2 * e);
  for (int i = 0; i < extra; ++i) w.e.push_back(Int(1));
  Lattice big = blowup_ambient(w);
  Lattice comp_neg = negate(complement(big, blowup_class(w).coords));
  NameTerm tail;
  tail.kind = NameTerm::Kind::Diag;
  tail.list = two_units ? std::vector<Int>{Int(2), Int(1)} : std::vector<Int>{Int(3)};
  Lattice expected = direct_sum(lam_neg, make(tail));
  (void)k;
  return isomorphic(comp_neg, expected);
}

}  // namespace latfill
