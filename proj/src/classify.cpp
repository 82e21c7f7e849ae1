#include "latfill/classify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace latfill {

namespace {

IntMat graph_gram(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges) {
  int n = int(weights.size());
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = weights[i];
  for (auto [a, b] : edges) {
    g(a, b) = -1;
    g(b, a) = -1;
  }
  return g;
}

// Path v0..v_{len-1} with an extra vertex attached to v[branch_at].
IntMat branched_chain(const std::vector<Int>& chain_weights, int branch_at) {
  std::vector<Int> w = chain_weights;
  w.push_back(2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < int(chain_weights.size()); ++i) edges.push_back({i, i + 1});
  edges.push_back({branch_at, int(chain_weights.size())});
  return graph_gram(w, edges);
}

IntMat chain_gram(const std::vector<Int>& weights) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < int(weights.size()); ++i) edges.push_back({i, i + 1});
  return graph_gram(weights, edges);
}

std::string term_to_string(const NameTerm& t) {
  std::ostringstream os;
  switch (t.kind) {
    case NameTerm::Kind::A: os << "A" << t.n; break;
    case NameTerm::Kind::D: os << "D" << t.n; break;
    case NameTerm::Kind::E: os << "E" << t.n; break;
    case NameTerm::Kind::T: os << "T" << t.n; break;
    case NameTerm::Kind::C: os << "C" << t.n; break;
    case NameTerm::Kind::Gamma12: os << "Gamma12"; break;
    case NameTerm::Kind::Empty: os << "empty"; break;
    case NameTerm::Kind::I: os << "I(" << t.a << "," << t.b << ")"; break;
    case NameTerm::Kind::Diag:
    case NameTerm::Kind::Lambda: {
      os << (t.kind == NameTerm::Kind::Diag ? "diag(" : "Lambda(");
      for (std::size_t i = 0; i < t.list.size(); ++i) os << (i ? "," : "") << t.list[i];
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace

std::string name_to_string(const LatticeName& name) {
  if (name.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (i) s += " + ";
    s += term_to_string(name[i]);
  }
  return s;
}

Lattice make(const NameTerm& term) {
  using K = NameTerm::Kind;
  IntMat g;
  switch (term.kind) {
    case K::A: {
      if (term.n < 1) throw std::invalid_argument("A(n) requires n >= 1");
      g = chain_gram(std::vector<Int>(term.n, Int(2)));
      break;
    }
    case K::D: {
      if (term.n < 4) throw std::invalid_argument("D(n) requires n >= 4");
      g = branched_chain(std::vector<Int>(term.n - 1, Int(2)), int(term.n) - 3);
      break;
    }
    case K::E: {
      if (term.n < 6 || term.n > 8) throw std::invalid_argument("E(n) requires n in {6,7,8}");
      g = branched_chain(std::vector<Int>(term.n - 1, Int(2)), 2);
      break;
    }
    case K::T: {
      if (term.n < 1 || term.n > 8) throw std::invalid_argument("T(n) requires 1 <= n <= 8");
      switch (term.n) {
        case 1: return make(NameTerm::simple(K::E, 8)).with_name("T1");
        case 2: return make(NameTerm::simple(K::E, 7)).with_name("T2");
        case 3: return make(NameTerm::simple(K::E, 6)).with_name("T3");
        case 4: return make(NameTerm::simple(K::D, 5)).with_name("T4");
        case 5: return make(NameTerm::simple(K::A, 4)).with_name("T5");
        case 6:
          return direct_sum(make(NameTerm::simple(K::A, 1)), make(NameTerm::simple(K::A, 2)))
              .with_name("T6");
        case 7: {
          NameTerm lam;
          lam.kind = K::Lambda;
          lam.list = {Int(2), Int(4)};
          return make(lam).with_name("T7");
        }
        default: {
          NameTerm d;
          d.kind = K::Diag;
          d.list = {Int(8)};
          return make(d).with_name("T8");
        }
      }
    }
    case K::C: {
      if (term.n < 1 || term.n > 12) throw std::invalid_argument("C(n) requires 1 <= n <= 12");
      std::string nm = "C" + std::to_string(term.n);
      if (term.n <= 9) {
        std::vector<Int> w(12 - term.n, Int(2));
        w[0] = 3;
        return Lattice(branched_chain(w, 2), nm);
      }
      if (term.n == 10)
        return Lattice(graph_gram({Int(3), Int(2), Int(2)}, {{0, 1}}), nm);
      if (term.n == 11) return Lattice(chain_gram({Int(3), Int(4)}), nm);
      return Lattice(chain_gram({Int(12)}), nm);
    }
    case K::Gamma12: return make(NameTerm::simple(K::C, 1)).with_name("Gamma12");
    case K::Diag: {
      int n = int(term.list.size());
      g = IntMat(n, n);
      for (int i = 0; i < n; ++i) g(i, i) = term.list[i];
      break;
    }
    case K::Lambda: {
      for (const Int& a : term.list)
        if (a < 1) throw std::invalid_argument("Lambda entries must be >= 1");
      if (term.list.empty()) throw std::invalid_argument("Lambda requires at least one entry");
      g = chain_gram(term.list);
      break;
    }
    case K::I: {
      if (term.a < 0 || term.b < 0 || term.a + term.b < 1)
        throw std::invalid_argument("I(a,b) requires a,b >= 0 and a+b >= 1");
      int n = int(term.a + term.b);
      g = IntMat(n, n);
      for (int i = 0; i < n; ++i) g(i, i) = i < term.a ? 1 : -1;
      break;
    }
    case K::Empty: g = IntMat(0, 0); break;
  }
  return Lattice(std::move(g), term_to_string(term));
}

Lattice make(const LatticeName& name) {
  Lattice acc;
  for (const NameTerm& t : name) acc = direct_sum(acc, make(t));
  return acc.with_name(name_to_string(name));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<Int> parse_int_list(const std::string& s, const std::string& ctx) {
  std::vector<Int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      std::string t = trim(cur);
      if (t.empty()) throw std::invalid_argument("empty entry in " + ctx);
      try {
        out.push_back(Int(t));
      } catch (...) {
        throw std::invalid_argument("bad integer '" + t + "' in " + ctx);
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

NameTerm parse_term(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty lattice name term");
  using K = NameTerm::Kind;
  if (s == "empty") return NameTerm::simple(K::Empty);
  if (s == "Gamma12") return NameTerm::simple(K::Gamma12);
  auto paren = [&](const std::string& head) -> std::optional<std::string> {
    if (s.size() > head.size() + 1 && s.compare(0, head.size() + 1, head + "(") == 0 &&
        s.back() == ')')
      return s.substr(head.size() + 1, s.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto body = paren("diag")) {
    NameTerm t;
    t.kind = K::Diag;
    t.list = parse_int_list(*body, "diag");
    return t;
  }
  if (auto body = paren("Lambda")) {
    NameTerm t;
    t.kind = K::Lambda;
    t.list = parse_int_list(*body, "Lambda");
    return t;
  }
  if (auto body = paren("I")) {
    auto vals = parse_int_list(*body, "I");
    if (vals.size() != 2) throw std::invalid_argument("I(a,b) takes two parameters");
    NameTerm t;
    t.kind = K::I;
    t.a = vals[0].convert_to<long>();
    t.b = vals[1].convert_to<long>();
    return t;
  }
  static const std::map<char, NameTerm::Kind> letters = {
      {'A', K::A}, {'D', K::D}, {'E', K::E}, {'T', K::T}, {'C', K::C}};
  auto it = letters.find(s[0]);
  if (it != letters.end() && s.size() > 1 &&
      std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    return NameTerm::simple(it->second, std::stol(s.substr(1)));
  throw std::invalid_argument("unknown lattice name '" + s + "'");
}

}  // namespace

LatticeName parse_name(const std::string& text) {
  LatticeName name;
  std::string cur;
  for (char c : text + "+") {
    if (c == '+') {
      name.push_back(parse_term(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return name;
}

namespace {

// Representatives of all +-pairs with 1 <= norm <= `bound`.
std::vector<IntVec> short_vectors_upto(const Lattice& l, const Int& bound) {
  std::vector<IntVec> out;
  for (Int n = 1; n <= bound; ++n) {
    auto slice = vectors_of_norm(l, n);
    out.insert(out.end(), slice.vectors.begin(), slice.vectors.end());
  }
  return out;
}

// Smallest bound whose short vectors generate the lattice (index one).
std::vector<IntVec> generating_short_vectors(const Lattice& l) {
  int r = l.rank();
  Int maxdiag = 1;
  for (int i = 0; i < r; ++i) maxdiag = std::max(maxdiag, l.gram()(i, i));
  Int bound = std::min(Int(2), maxdiag);
  while (true) {
    std::vector<IntVec> vecs = short_vectors_upto(l, bound);
    IntMat rows(int(vecs.size()), r);
    for (int i = 0; i < int(vecs.size()); ++i) rows.set_row(i, vecs[i]);
    Int idx = span_index(rows, r);
    if (idx == 1) return vecs;
    if (bound >= maxdiag) throw std::logic_error("generating_short_vectors: no generation");
    bound = std::min(Int(bound * 2), maxdiag);
  }
}

}  // namespace

ShortBasis shorten_basis(const Lattice& l) {
  int r = l.rank();
  IntMat b = IntMat::identity(r);
  if (r == 0 || !l.positive_definite()) return {b, l};
  std::vector<IntVec> gen = generating_short_vectors(l);
  std::stable_sort(gen.begin(), gen.end(), [&](const IntVec& x, const IntVec& y) {
    Int nx = quadratic(l.gram(), x), ny = quadratic(l.gram(), y);
    if (nx != ny) return nx < ny;
    return lex_less(x, y);
  });
  IntMat binv = IntMat::identity(r);
  IntMat gcur = l.gram();
  bool improved = true;
  while (improved) {
    improved = false;
    for (const IntVec& s : gen) {
      Int ns = quadratic(l.gram(), s);
      IntVec y = apply_left(s, binv);
      for (int i = 0; i < r; ++i) {
        if ((y[i] == 1 || y[i] == -1) && ns < gcur(i, i)) {
          b.set_row(i, s);
          binv = inverse_unimodular(b);
          gcur = mul(mul(b, l.gram()), transpose(b));
          improved = true;
          break;
        }
      }
    }
  }
  return {b, Lattice(std::move(gcur))};
}

IsoResult is_isomorphic(const Lattice& l1, const Lattice& l2) {
  if (l1.rank() > kIsomorphismRankLimit || l2.rank() > kIsomorphismRankLimit)
    throw RankGuardError("is_isomorphic: rank limit (17) exceeded");
  IsoResult res;
  if (l1.rank() != l2.rank()) return res;
  if (l1.rank() == 0) {
    res.isomorphic = true;
    res.witness = IntMat(0, 0);
    return res;
  }
  if (!l1.positive_definite() || !l2.positive_definite())
    throw std::invalid_argument("is_isomorphic: lattices must be positive definite");
  if (l1.det() != l2.det()) return res;
  if (is_even(l1) != is_even(l2)) return res;
  int r = l1.rank();
  ShortBasis b1 = shorten_basis(l1), b2 = shorten_basis(l2);
  const IntMat& g1 = b1.lattice.gram();
  const IntMat& g2 = b2.lattice.gram();

  std::map<Int, std::vector<IntVec>> cand_cache;
  std::vector<const std::vector<IntVec>*> cand(r);
  for (Int n = 1; n <= 4; ++n)
    if (vectors_of_norm(l1, n).vectors.size() != vectors_of_norm(l2, n).vectors.size()) return res;
  for (int i = 0; i < r; ++i) {
    Int n = g1(i, i);
    auto it = cand_cache.find(n);
    if (it == cand_cache.end()) {
      auto s2 = vectors_of_norm(b2.lattice, n).vectors;
      if (vectors_of_norm(b1.lattice, n).vectors.size() != s2.size()) return res;
      std::vector<IntVec> full;
      full.reserve(2 * s2.size());
      for (auto& v : s2) {
        full.push_back(negated(v));
        full.push_back(std::move(v));
      }
      it = cand_cache.emplace(std::move(n), std::move(full)).first;
    }
    cand[i] = &it->second;
  }

  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return cand[a]->size() < cand[c]->size(); });

  std::vector<IntVec> w(r);
  std::function<bool(int)> dfs = [&](int t) -> bool {
    if (t == r) return true;
    int i = order[t];
    for (const IntVec& c : *cand[i]) {
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) {
        int j = order[s];
        if (bilinear(c, g2, w[j]) != g1(i, j)) ok = false;
      }
      if (!ok) continue;
      w[i] = c;
      if (dfs(t + 1)) return true;
    }
    return false;
  };
  if (!dfs(0)) return res;

  IntMat wm(r, r);
  for (int i = 0; i < r; ++i) wm.set_row(i, w[i]);
  IntMat m = mul(mul(inverse_unimodular(b1.basis), wm), b2.basis);
  IntMat check = mul(mul(m, l2.gram()), transpose(m));
  if (!(check == l1.gram())) throw std::logic_error("is_isomorphic: witness verification failed");
  Int dm = det(m);
  if (dm != 1 && dm != -1) throw std::logic_error("is_isomorphic: witness not unimodular");
  res.isomorphic = true;
  res.witness = std::move(m);
  return res;
}

bool isomorphic(const Lattice& l1, const Lattice& l2) { return is_isomorphic(l1, l2).isomorphic; }

RootDecomposition root_decomposition(const Lattice& l) {
  if (!l.positive_definite())
    throw std::invalid_argument("root_decomposition: lattice not positive definite");
  Lattice red = reduced_part(l).reduced;
  RootDecomposition dec;
  if (red.rank() == 0) return dec;
  auto reps = vectors_of_norm(red, 2).vectors;
  if (reps.empty()) return dec;
  // Positive roots under the lexicographic functional.
  auto positive = [](const IntVec& v) {
    for (const Int& x : v) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  };
  std::set<IntVec> pos;
  for (const IntVec& v : reps) pos.insert(positive(v) ? v : negated(v));
  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<IntVec> simple;
  for (const IntVec& a : pos) {
    bool sum = false;
    for (const IntVec& b : pos) {
      if (b == a) continue;
      IntVec diff(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      if (pos.count(diff)) {
        sum = true;
        break;
      }
    }
    if (!sum) simple.push_back(a);
  }
  int s = int(simple.size());
  std::vector<std::vector<int>> adj(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      Int p = pairing(red, simple[i], simple[j]);
      if (p == 0) continue;
      if (p != -1) throw std::logic_error("root_decomposition: unexpected simple root pairing");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  std::vector<int> comp(s, -1);
  int ncomp = 0;
  for (int i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < s; ++i)
      if (comp[i] == c) verts.push_back(i);
    int n = int(verts.size());
    int branch = -1;
    bool bad = false;
    for (int v : verts) {
      if (adj[v].size() > 3) bad = true;
      if (adj[v].size() == 3) {
        if (branch >= 0) bad = true;
        branch = v;
      }
    }
    if (bad) throw std::logic_error("root_decomposition: not an ADE diagram");
    RootComponent rc;
    if (branch < 0) {
      rc = {NameTerm::Kind::A, n};
    } else {
      std::vector<int> legs;
      for (int nb : adj[branch]) {
        int len = 1, prev = branch, cur = nb;
        while (true) {
          int next = -1;
          for (int u : adj[cur])
            if (u != prev) next = u;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        legs.push_back(len);
      }
      std::sort(legs.begin(), legs.end());
      if (legs[0] == 1 && legs[1] == 1)
        rc = {NameTerm::Kind::D, legs[2] + 3};
      else if (legs == std::vector<int>{1, 2, 2})
        rc = {NameTerm::Kind::E, 6};
      else if (legs == std::vector<int>{1, 2, 3})
        rc = {NameTerm::Kind::E, 7};
      else if (legs == std::vector<int>{1, 2, 4})
        rc = {NameTerm::Kind::E, 8};
      else
        throw std::logic_error("root_decomposition: not an ADE diagram");
    }
    dec.components.push_back(rc);
  }
  dec.covered_rank = s;
  std::sort(dec.components.begin(), dec.components.end(),
            [](const RootComponent& a, const RootComponent& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.n < b.n;
            });
  return dec;
}

std::string root_decomposition_string(const RootDecomposition& d) {
  if (d.components.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (i) s += " + ";
    switch (d.components[i].kind) {
      case NameTerm::Kind::A: s += "A"; break;
      case NameTerm::Kind::D: s += "D"; break;
      default: s += "E"; break;
    }
    s += std::to_string(d.components[i].n);
  }
  return s;
}

namespace {

// Orthogonal indecomposable summands found from short generating vectors.
std::vector<Lattice> orthogonal_split(const Lattice& l) {
  int r = l.rank();
  if (r == 0) return {};
  std::vector<IntVec> gen = generating_short_vectors(l);
  // Keep only indecomposable vectors: v is decomposable when some u in the
  // set (either sign) satisfies u.v == u^2, i.e. v - u is orthogonal to u.
  std::vector<IntVec> indec;
  for (const IntVec& v : gen) {
    bool dec = false;
    for (const IntVec& u : gen) {
      if (u == v) continue;
      Int p = pairing(l, u, v);
      Int nu = quadratic(l.gram(), u);
      if (p == nu || -p == nu) {
        dec = true;
        break;
      }
    }
    if (!dec) indec.push_back(v);
  }
  int m = int(indec.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pairing(l, indec[i], indec[j]) != 0) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<Lattice> comps;
  int total_rank = 0;
  for (auto& [root, members] : groups) {
    IntMat rows(int(members.size()), r);
    for (int i = 0; i < int(members.size()); ++i) rows.set_row(i, indec[members[i]]);
    HnfResult h = hermite_normal_form(rows);
    comps.push_back(sublattice_of(l, h.h));
    total_rank += h.rank;
  }
  if (total_rank != r) throw std::logic_error("orthogonal_split: rank mismatch");
  return comps;
}

// Gauss-reduced form of a rank-2 positive definite lattice:
// [[a,b],[b,c]] with 0 <= 2b <= a <= c.
IntMat gauss_reduced_rank2(const Lattice& l) {
  Int a = l.gram()(0, 0), b = l.gram()(0, 1), c = l.gram()(1, 1);
  while (true) {
    if (a > c) {
      std::swap(a, c);
      continue;
    }
    Int t = floor_div(2 * b + a, 2 * a);  // nearest integer to b/a
    if (t != 0) {
      c += t * t * a - 2 * t * b;
      b -= t * a;
      continue;
    }
    if (b < 0) {
      b = -b;
      continue;
    }
    break;
  }
  IntMat g(2, 2);
  g(0, 0) = a;
  g(0, 1) = b;
  g(1, 0) = b;
  g(1, 1) = c;
  return g;
}

std::optional<NameTerm> name_component(const Lattice& c) {
  using K = NameTerm::Kind;
  int r = c.rank();
  const Int& d = c.det();
  if (r == 1) {
    NameTerm t;
    t.kind = K::Diag;
    t.list = {c.gram()(0, 0)};
    return t;
  }
  if (r == 2) {
    IntMat g = gauss_reduced_rank2(c);
    if (g(0, 1) == 1) {
      if (g(0, 0) == 2 && g(1, 1) == 2) return NameTerm::simple(K::A, 2);
      NameTerm t;
      t.kind = K::Lambda;
      t.list = {g(0, 0), g(1, 1)};
      return t;
    }
    if (g(0, 1) == 0) return std::nullopt;  // decomposable, handled upstream
  }
  std::vector<NameTerm> tries;
  if (d == r + 1) tries.push_back(NameTerm::simple(K::A, r));
  if (r >= 4 && d == 4) tries.push_back(NameTerm::simple(K::D, r));
  if ((r == 6 && d == 3) || (r == 7 && d == 2) || (r == 8 && d == 1))
    tries.push_back(NameTerm::simple(K::E, r));
  if (r == 12 && d == 1) tries.push_back(NameTerm::simple(K::Gamma12));
  if (r == 2 && d == 7) {
    NameTerm t;
    t.kind = K::Lambda;
    t.list = {Int(2), Int(4)};
    tries.push_back(t);
  }
  long cn = 13 - r;
  if (cn >= 2 && cn <= 11 && d == cn) tries.push_back(NameTerm::simple(K::C, cn));
  for (const NameTerm& t : tries)
    if (isomorphic(make(t), c)) return t;
  return std::nullopt;
}

}  // namespace

std::optional<LatticeName> recognize(const Lattice& l) {
  if (l.rank() > kIsomorphismRankLimit) throw RankGuardError("recognize: rank limit (17) exceeded");
  if (l.rank() > 0 && !l.positive_definite())
    throw std::invalid_argument("recognize: lattice not positive definite");
  ReducedPart rp = reduced_part(l);
  std::vector<NameTerm> terms;
  std::vector<Int> diag_entries;
  for (const Lattice& comp : orthogonal_split(rp.reduced)) {
    auto t = name_component(comp);
    if (!t) return std::nullopt;
    if (t->kind == NameTerm::Kind::Diag)
      diag_entries.push_back(t->list[0]);
    else
      terms.push_back(*t);
  }
  std::sort(terms.begin(), terms.end(), [](const NameTerm& a, const NameTerm& b) {
    Lattice la = make(a), lb = make(b);
    if (la.rank() != lb.rank()) return la.rank() > lb.rank();
    return term_to_string(a) < term_to_string(b);
  });
  for (int i = 0; i < rp.unit_count; ++i) diag_entries.push_back(Int(1));
  if (!diag_entries.empty()) {
    std::sort(diag_entries.begin(), diag_entries.end(), std::greater<>());
    NameTerm t;
    t.kind = NameTerm::Kind::Diag;
    t.list = std::move(diag_entries);
    terms.push_back(t);
  }
  if (terms.empty()) terms.push_back(NameTerm::simple(NameTerm::Kind::Empty));
  return terms;
}

std::vector<std::string> catalog_annotation(int rank, const Int& det) {
  struct Row {
    int rank;
    int det;
    const char* label;
  };
  static const Row table[] = {
      {1, 2, "A1"},    {1, 3, "O1"},      {1, 4, "O1"},    {1, 5, "O1"},    {1, 6, "O1"},
      {1, 7, "O1"},    {1, 8, "O1"},      {1, 9, "O1"},    {1, 10, "O1"},   {1, 11, "O1"},
      {2, 3, "A2"},    {2, 5, "A1 O1"},   {2, 7, "A1 O1"}, {2, 8, "O2"},    {2, 9, "A1 O1"},
      {2, 11, "O2"},   {2, 11, "A1 O1"},  {3, 4, "A3"},    {3, 7, "A2 O1"}, {3, 8, "A1^2 O1"},
      {3, 10, "A2 O1"},{4, 4, "D4"},      {4, 5, "A4"},    {4, 8, "A3 O1"}, {4, 9, "A3 O1"},
      {5, 4, "D5"},    {5, 6, "A5"},      {5, 8, "D4 O1"}, {6, 3, "E6"},    {6, 4, "D6"},
      {6, 7, "D5 O1"}, {6, 7, "A6"},      {7, 2, "E7"},    {7, 4, "D7"},    {7, 5, "E6 O1"},
      {7, 6, "D6 O1"}, {8, 1, "E8"},      {8, 3, "E7 O1"}, {8, 4, "D8"},    {8, 5, "D7 O1"},
      {8, 5, "E7 O1"}, {9, 4, "D8 O1"},   {9, 4, "E7 A1 O1"}, {9, 4, "D9"}, {10, 3, "D9 O1"},
      {11, 2, "D10 A1"}, {12, 1, "D12"},
  };
  std::vector<std::string> out;
  for (const Row& r : table)
    if (r.rank == rank && det == r.det) out.push_back(r.label);
  return out;
}

}  // namespace latfill
