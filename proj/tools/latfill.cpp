#include "latfill/classify.hpp"
#include "latfill/construct.hpp"
#include "latfill/obstruction.hpp"
#include "latfill/textio.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace latfill;

namespace {

json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json json_gram(const Lattice& l) {
  json rows = json::array();
  for (int i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < l.rank(); ++j) row.push_back(json_int(l.gram()(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Lattice load_lattice(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open lattice file '" + arg.substr(1) + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_lattice_text(text);
  }
  return make(parse_name(arg));
}

Lattice load_lattice_opt(const std::string& name_arg, const std::string& file_arg) {
  if (!file_arg.empty()) return load_lattice("@" + file_arg);
  if (name_arg.empty()) throw std::invalid_argument("no lattice given");
  return load_lattice(name_arg);
}

std::string display_name(const Lattice& l) {
  if (l.rank() > kIsomorphismRankLimit || (l.rank() > 0 && !l.positive_definite())) return "";
  auto n = recognize(l);
  return n ? name_to_string(*n) : "";
}

KnotSpec resolve_knot(const std::string& knot, const std::string& vseq, long g4,
                      const std::string& base) {
  if (knot == "U") return knot_unknot();
  if (knot == "T23") return knot_t23();
  if (knot == "T25") return knot_t25();
  if (knot != "custom") throw std::invalid_argument("unknown knot '" + knot + "'");
  VSequence v;
  if (!vseq.empty() && vseq != "0")
    for (const Int& x : parse_int_csv(vseq)) v.values.push_back(x.convert_to<long>());
  while (!v.values.empty() && v.values.back() == 0) v.values.pop_back();
  std::vector<Lattice> bases;
  std::string cur;
  for (char c : base + ";") {
    if (c == ';') {
      if (!cur.empty()) bases.push_back(make(parse_name(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (bases.empty()) bases.push_back(make(parse_name("empty")));
  return make_knot_spec("custom", g4, v, bases);
}

void print_gram(std::ostream& os, const Lattice& l) {
  os << "gram:\n";
  for (int i = 0; i < l.rank(); ++i) {
    for (int j = 0; j < l.rank(); ++j) os << (j ? " " : "") << l.gram()(i, j);
    os << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact lattice toolkit for definite fillings of integer surgeries"};
  app.require_subcommand(1);

  // info
  auto* info = app.add_subcommand("info", "rank, determinant, parity, roots and delta of a lattice");
  std::string info_lattice, info_file;
  bool info_json = false;
  info->add_option("lattice", info_lattice, "lattice name expression or @file");
  info->add_option("--file", info_file, "read the lattice from a text-format file");
  info->add_flag("--json", info_json, "machine-readable output");

  // delta
  auto* deltac = app.add_subcommand("delta", "delta invariant of a positive definite lattice");
  std::string delta_lattice_arg, delta_file;
  bool delta_json = false;
  deltac->add_option("lattice", delta_lattice_arg, "lattice name expression or @file");
  deltac->add_option("--file", delta_file, "read the lattice from a text-format file");
  deltac->add_flag("--json", delta_json, "machine-readable output");

  // complement
  auto* compc = app.add_subcommand("complement", "orthogonal complement of a vector");
  std::string comp_lattice, comp_file, comp_vector;
  bool comp_json = false;
  compc->add_option("lattice", comp_lattice, "lattice name expression or @file");
  compc->add_option("--file", comp_file, "read the lattice from a text-format file");
  compc->add_option("--vector", comp_vector, "comma-separated coordinates")->required();
  compc->add_flag("--json", comp_json, "machine-readable output");

  // isom
  auto* isomc = app.add_subcommand("isom", "exact isomorphism test with witness");
  std::string isom_a, isom_b;
  bool isom_json = false;
  isomc->add_option("first", isom_a, "first lattice (name expression or @file)")->required();
  isomc->add_option("second", isom_b, "second lattice (name expression or @file)")->required();
  isomc->add_flag("--json", isom_json, "machine-readable output");

  // vectors
  auto* vecc = app.add_subcommand("vectors", "vectors of a given norm, one per +-pair");
  std::string vec_lattice, vec_file, vec_norm;
  bool vec_count = false, vec_json = false;
  vecc->add_option("lattice", vec_lattice, "lattice name expression or @file");
  vecc->add_option("--file", vec_file, "read the lattice from a text-format file");
  vecc->add_option("--norm", vec_norm, "target squared norm")->required();
  vecc->add_flag("--count", vec_count, "print only the number of pairs");
  vecc->add_flag("--json", vec_json, "machine-readable output");

  // dtable
  auto* dtc = app.add_subcommand("dtable", "correction terms of integer surgery");
  std::string dt_knot = "U", dt_vseq, dt_base;
  long dt_g4 = 0, dt_n = 1;
  bool dt_json = false;
  dtc->add_option("--knot", dt_knot, "U, T23, T25 or custom")->required();
  dtc->add_option("--n", dt_n, "surgery coefficient (positive integer)")->required();
  dtc->add_option("--vseq", dt_vseq, "custom knot: comma-separated V-sequence");
  dtc->add_option("--g4", dt_g4, "custom knot: slice genus bound");
  dtc->add_option("--base", dt_base, "custom knot: semicolon-separated base fillings");
  dtc->add_flag("--json", dt_json, "machine-readable output");

  // classify
  auto* clc = app.add_subcommand("classify", "reduced definite fillings per surgery coefficient");
  std::string cl_knot, cl_vseq, cl_base;
  long cl_g4 = 0, cl_nmax = 1;
  bool cl_json = false;
  clc->add_option("--knot", cl_knot, "U, T23, T25 or custom")->required();
  clc->add_option("--nmax", cl_nmax, "largest surgery coefficient")->required();
  clc->add_option("--vseq", cl_vseq, "custom knot: comma-separated V-sequence");
  clc->add_option("--g4", cl_g4, "custom knot: slice genus bound");
  clc->add_option("--base", cl_base, "custom knot: semicolon-separated base fillings");
  clc->add_flag("--json", cl_json, "machine-readable output");

  // construct
  auto* con = app.add_subcommand("construct", "continued fractions, plumbings, identities");
  con->require_subcommand(1);
  auto* hjc = con->add_subcommand("hj", "Hirzebruch-Jung continued fraction of a/b");
  std::string hj_frac;
  bool hj_json = false;
  hjc->add_option("fraction", hj_frac, "a/b with a > 0, reduced")->required();
  hjc->add_flag("--json", hj_json, "machine-readable output");
  auto* sfc = con->add_subcommand("seifert", "star-shaped plumbing from Seifert data");
  std::string sf_data;
  bool sf_json = false;
  sfc->add_option("data", sf_data, "\"b; b1/a1, b2/a2, ...\"")->required();
  sfc->add_flag("--json", sf_json, "machine-readable output");
  auto* vfc = con->add_subcommand("verify", "complement identity for a catalog family");
  std::string vf_family;
  long vf_n = 1;
  bool vf_json = false;
  vfc->add_option("--family", vf_family, "T, C, E, A, D, double3 or double21")->required();
  vfc->add_option("--n", vf_n, "family index");
  vfc->add_flag("--json", vf_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (info->parsed()) {
    Lattice l = load_lattice_opt(info_lattice, info_file);
    json out;
    out["rank"] = l.rank();
    out["det"] = json_int(l.det());
    out["signature"] = {l.signature().positive, l.signature().negative};
    out["even"] = is_even(l);
    out["gram"] = json_gram(l);
    std::string reduced_name, roots, delta_str, annot;
    int units = 0;
    if (l.positive_definite() && l.rank() <= kIsomorphismRankLimit) {
      ReducedPart rp = reduced_part(l);
      units = rp.unit_count;
      auto rn = recognize(rp.reduced);
      reduced_name = rn ? name_to_string(*rn) : "?";
      roots = root_decomposition_string(root_decomposition(l));
      delta_str = rat_to_string(delta_lattice(l));
      auto ann = catalog_annotation(rp.reduced.rank(), abs(rp.reduced.det()));
      for (std::size_t i = 0; i < ann.size(); ++i) annot += (i ? ", " : "") + ann[i];
      out["reduced"] = reduced_name;
      out["units"] = units;
      out["roots"] = roots;
      out["delta"] = delta_str;
      out["catalog"] = annot;
    }
    if (info_json) {
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (!l.name().empty()) std::cout << "name: " << l.name() << "\n";
    std::cout << "rank: " << l.rank() << "\n";
    std::cout << "det: " << l.det() << "\n";
    std::cout << "signature: +" << l.signature().positive << " -" << l.signature().negative
              << (l.signature().zero ? " 0" + std::to_string(l.signature().zero) : "") << "\n";
    std::cout << "parity: " << (is_even(l) ? "even" : "odd") << "\n";
    if (!reduced_name.empty()) {
      std::cout << "reduced: " << reduced_name << ", units: " << units << "\n";
      std::cout << "roots: " << roots << "\n";
      std::cout << "delta: " << delta_str << "\n";
      if (!annot.empty()) std::cout << "catalog: " << annot << "\n";
    }
    return 0;
  }

  if (deltac->parsed()) {
    Lattice l = load_lattice_opt(delta_lattice_arg, delta_file);
    Rat d = delta_lattice(l);
    if (delta_json)
      std::cout << json{{"delta", rat_to_string(d)}}.dump() << "\n";
    else
      std::cout << "delta: " << rat_to_string(d) << "\n";
    return 0;
  }

  if (compc->parsed()) {
    Lattice l = load_lattice_opt(comp_lattice, comp_file);
    IntVec v = parse_int_csv(comp_vector);
    if (int(v.size()) != l.rank()) throw std::invalid_argument("vector length differs from rank");
    Sublattice s = complement_full(l, v);
    std::string nm = display_name(s.lattice);
    if (comp_json) {
      json out;
      out["rank"] = s.lattice.rank();
      out["det"] = json_int(s.lattice.det());
      out["gram"] = json_gram(s.lattice);
      if (!nm.empty()) out["name"] = nm;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "rank: " << s.lattice.rank() << "\n";
    std::cout << "det: " << s.lattice.det() << "\n";
    print_gram(std::cout, s.lattice);
    std::cout << "basis:\n";
    for (int i = 0; i < s.basis.rows(); ++i) std::cout << format_int_csv(s.basis.row(i)) << "\n";
    if (!nm.empty()) std::cout << "name: " << nm << "\n";
    return 0;
  }

  if (isomc->parsed()) {
    Lattice a = load_lattice(isom_a), b = load_lattice(isom_b);
    IsoResult r = is_isomorphic(a, b);
    if (isom_json) {
      json out;
      out["isomorphic"] = r.isomorphic;
      if (r.isomorphic) {
        json wit = json::array();
        for (int i = 0; i < r.witness.rows(); ++i) {
          json row = json::array();
          for (int j = 0; j < r.witness.cols(); ++j) row.push_back(json_int(r.witness(i, j)));
          wit.push_back(row);
        }
        out["witness"] = wit;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "isomorphic: " << (r.isomorphic ? "true" : "false") << "\n";
    if (r.isomorphic) {
      std::cout << "witness:\n";
      for (int i = 0; i < r.witness.rows(); ++i)
        std::cout << format_int_csv(r.witness.row(i)) << "\n";
    }
    return 0;
  }

  if (vecc->parsed()) {
    Lattice l = load_lattice_opt(vec_lattice, vec_file);
    NormSlice s = vectors_of_norm(l, Int(vec_norm));
    if (vec_json) {
      json out;
      out["count"] = s.vectors.size();
      if (!vec_count) {
        json vs = json::array();
        for (const IntVec& v : s.vectors) {
          json row = json::array();
          for (const Int& x : v) row.push_back(json_int(x));
          vs.push_back(row);
        }
        out["vectors"] = vs;
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    std::cout << "count: " << s.vectors.size() << "\n";
    if (!vec_count)
      for (const IntVec& v : s.vectors) std::cout << "v: " << format_int_csv(v) << "\n";
    return 0;
  }

  if (dtc->parsed()) {
    KnotSpec spec = resolve_knot(dt_knot, dt_vseq, dt_g4, dt_base);
    DTable t = d_table(spec, dt_n);
    Rat dy = delta_y(spec, dt_n);
    if (dt_json) {
      json out;
      out["knot"] = spec.label;
      out["n"] = t.n;
      json ds = json::array();
      for (const Rat& d : t.d) ds.push_back(rat_to_string(d));
      out["d"] = ds;
      out["delta_Y"] = rat_to_string(dy);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    for (long i = 0; i < t.n; ++i) std::cout << "i=" << i << ": " << rat_to_string(t.d[i]) << "\n";
    std::cout << "delta_Y: " << rat_to_string(dy) << "\n";
    return 0;
  }

  if (clc->parsed()) {
    KnotSpec spec = resolve_knot(cl_knot, cl_vseq, cl_g4, cl_base);
    FillingTable table = classify_fillings(spec, cl_nmax);
    if (cl_json) {
      json rows = json::array();
      for (const auto& [n, entries] : table.rows) {
        json row;
        row["n"] = n;
        json ls = json::array();
        for (const FillingEntry& e : entries) {
          json item;
          std::string nm = display_name(e.reduced);
          if (!nm.empty()) item["name"] = nm;
          item["rank"] = e.reduced.rank();
          item["det"] = json_int(e.reduced.det());
          item["gram"] = json_gram(e.reduced);
          item["delta"] = rat_to_string(e.delta);
          json flags = json::array();
          if (e.survived_delta) flags.push_back("survived-delta");
          if (e.survived_rokhlin) flags.push_back("survived-rokhlin");
          if (e.needs_unit_padding) flags.push_back("needs-unit-padding");
          item["flags"] = flags;
          ls.push_back(item);
        }
        row["lattices"] = ls;
        rows.push_back(row);
      }
      json out;
      out["knot"] = spec.label;
      out["rows"] = rows;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    for (const auto& [n, entries] : table.rows) {
      for (const FillingEntry& e : entries) {
        std::string nm = display_name(e.reduced);
        if (nm.empty()) nm = "rank " + std::to_string(e.reduced.rank()) + " lattice";
        std::cout << n << " | " << nm;
        if (e.needs_unit_padding) std::cout << " | needs-unit-padding";
        else std::cout << " |";
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (hjc->parsed()) {
    auto slash = hj_frac.find('/');
    Int a, b;
    try {
      a = Int(hj_frac.substr(0, slash));
      b = slash == std::string::npos ? Int(1) : Int(hj_frac.substr(slash + 1));
    } catch (...) {
      throw std::invalid_argument("bad fraction '" + hj_frac + "'");
    }
    std::vector<Int> ts = hj_expansion(a, b);
    Rat back = hj_evaluate(ts);
    if (hj_json) {
      json out;
      json e = json::array();
      for (const Int& t : ts) e.push_back(json_int(t));
      out["expansion"] = e;
      out["value"] = rat_to_string(back);
      std::cout << out.dump() << "\n";
      return 0;
    }
    std::cout << "fraction: " << a << "/" << b << "\n";
    std::cout << "expansion:";
    for (const Int& t : ts) std::cout << " " << t;
    std::cout << "\n";
    std::cout << "value: " << rat_to_string(back) << "\n";
    return 0;
  }

  if (sfc->parsed()) {
    SeifertData sd = parse_seifert(sf_data);
    PlumbingGraph g = seifert_plumbing(sd);
    Lattice l = plumbing_gram(g);
    std::string nm = display_name(l);
    if (sf_json) {
      json out;
      out["euler"] = rat_to_string(euler_number(sd));
      json ws = json::array();
      for (const Int& w : g.weights) ws.push_back(json_int(w));
      out["weights"] = ws;
      json es = json::array();
      for (auto [x, y] : g.edges) es.push_back({x, y});
      out["edges"] = es;
      out["det"] = json_int(l.det());
      out["gram"] = json_gram(l);
      if (!nm.empty()) out["name"] = nm;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "euler: " << rat_to_string(euler_number(sd)) << "\n";
    std::cout << "weights:";
    for (const Int& w : g.weights) std::cout << " " << w;
    std::cout << "\n";
    std::cout << "edges:";
    for (auto [x, y] : g.edges) std::cout << " " << x << "-" << y;
    std::cout << "\n";
    std::cout << "det: " << l.det() << "\n";
    if (!nm.empty()) std::cout << "name: " << nm << "\n";
    return 0;
  }

  if (vfc->parsed()) {
    IdentityReport rep = verify_identity(parse_family(vf_family), vf_n);
    if (vf_json) {
      json out;
      out["family"] = family_name(rep.family);
      out["n"] = rep.n;
      out["ambient"] = rep.ambient;
      out["vector"] = format_int_csv(rep.vector);
      out["rank"] = rep.rank;
      out["det"] = json_int(rep.det);
      out["expected"] = rep.expected;
      if (rep.checked_isomorphism) out["isomorphic"] = rep.isomorphic;
      out["root_type"] = rep.root_type;
      out["passed"] = rep.passed;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "family: " << family_name(rep.family) << "\n";
    std::cout << "n: " << rep.n << "\n";
    std::cout << "ambient: " << rep.ambient << "\n";
    if (!rep.vector.empty()) std::cout << "vector: " << format_int_csv(rep.vector) << "\n";
    std::cout << "rank: " << rep.rank << "\n";
    std::cout << "det: " << rep.det << "\n";
    std::cout << "expected: " << rep.expected << "\n";
    if (rep.checked_isomorphism)
      std::cout << "isomorphic: " << (rep.isomorphic ? "true" : "false") << "\n";
    if (!rep.root_type.empty()) std::cout << "root_type: " << rep.root_type << "\n";
    std::cout << "passed: " << (rep.passed ? "true" : "false") << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const RankGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
