#include "latfill/textio.hpp"

#include "latfill/classify.hpp"

#include <sstream>

namespace latfill {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Lattice parse_lattice_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("name:", 0) == 0) return make(parse_name(t.substr(5)));
    if (t != "gram:") throw std::invalid_argument("lattice text: expected 'name:<tag>' or 'gram:'");
    std::vector<IntVec> rows;
    while (std::getline(in, line)) {
      std::string r = trim(line);
      if (r.empty()) break;
      IntVec row;
      std::istringstream rs(r);
      std::string tok;
      while (rs >> tok) {
        try {
          row.push_back(Int(tok));
        } catch (...) {
          throw std::invalid_argument("lattice text: bad integer '" + tok + "'");
        }
      }
      rows.push_back(std::move(row));
      if (rows.size() == rows.front().size()) break;
    }
    int n = int(rows.size());
    for (const IntVec& r : rows)
      if (int(r.size()) != n) throw std::invalid_argument("lattice text: gram must be square");
    IntMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rows[i][j];
    if (!g.is_symmetric()) throw std::invalid_argument("lattice text: gram not symmetric");
    return Lattice(std::move(g));
  }
  throw std::invalid_argument("lattice text: empty input");
}

std::string emit_lattice_text(const Lattice& l) {
  if (!l.name().empty()) return "name:" + l.name() + "\n";
  std::ostringstream os;
  os << "gram:\n";
  for (int i = 0; i < l.rank(); ++i) {
    for (int j = 0; j < l.rank(); ++j) os << (j ? " " : "") << l.gram()(i, j);
    os << "\n";
  }
  return os.str();
}

IntVec parse_int_csv(const std::string& text) {
  IntVec out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      std::string t = trim(cur);
      cur.clear();
      if (t.empty()) throw std::invalid_argument("empty entry in integer list");
      try {
        out.push_back(Int(t));
      } catch (...) {
        throw std::invalid_argument("bad integer '" + t + "'");
      }
    } else {
      cur += c;
    }
  }
  return out;
}

std::string format_int_csv(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace latfill
