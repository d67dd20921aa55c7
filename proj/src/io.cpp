#include "circsort/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace circsort {

Perm parse_perm_line(const std::string& line) {
  std::istringstream iss(line);
  std::vector<int> img;
  int v;
  while (iss >> v) img.push_back(v);
  std::string rest;
  iss.clear();
  if (iss >> rest)
    throw ParseError("permutation line has a non-integer token: " + rest);
  if (img.empty()) throw ParseError("empty permutation line");
  try {
    return Perm::make(std::move(img));
  } catch (const NotABijection& e) {
    throw ParseError(std::string("invalid permutation: ") + e.what());
  }
}

PermFile read_perm_stream(std::istream& in) {
  std::optional<int> expect;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      // recognized header: "# expect t>=V"
      std::istringstream iss(line.substr(1));
      std::string word, cmp;
      if (iss >> word >> cmp && word == "expect" && cmp.rfind("t>=", 0) == 0)
        expect = std::stoi(cmp.substr(3));
      continue;
    }
    return PermFile{parse_perm_line(line), expect};
  }
  throw ParseError("no permutation line found");
}

PermFile read_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_perm_stream(in);
}

std::string format_perm(const Perm& p) {
  std::ostringstream out;
  for (int x = 0; x < p.n(); ++x) {
    if (x) out << ' ';
    out << p(x);
  }
  return out.str();
}

void write_perm_file(const std::string& path, const Perm& p,
                     std::optional<int> expect_t) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  if (expect_t) out << "# expect t>=" << *expect_t << "\n";
  out << format_perm(p) << "\n";
}

WreathElement read_wreath_stream(std::istream& in) {
  std::string line;
  auto next_data_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      return line;
    }
    throw ParseError("unexpected end of wreath input");
  };
  std::istringstream header(next_data_line());
  int m = 0, n = 0;
  if (!(header >> m >> n) || m < 1 || n < 1)
    throw ParseError("wreath header must be 'm n'");
  Perm outer = parse_perm_line(next_data_line());
  std::vector<Perm> fibers;
  fibers.reserve(m);
  for (int r = 0; r < m; ++r) fibers.push_back(parse_perm_line(next_data_line()));
  return WreathElement(m, n, std::move(outer), std::move(fibers));
}

std::string format_wreath(const WreathElement& w) {
  std::ostringstream out;
  out << w.m << ' ' << w.n << '\n' << format_perm(w.pi) << '\n';
  for (const Perm& f : w.fibers) out << format_perm(f) << '\n';
  return out.str();
}

PermPoly parse_poly(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos)
    throw ParseError("polynomial line must be 'n: a0 a1 ...'");
  PermPoly f;
  try {
    f.n = std::stoi(line.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("invalid modulus in polynomial line");
  }
  if (f.n < 1) throw ParseError("polynomial modulus must be >= 1");
  std::istringstream iss(line.substr(colon + 1));
  long long c;
  while (iss >> c) f.coeffs.push_back(((c % f.n) + f.n) % f.n);
  if (f.coeffs.empty()) f.coeffs.push_back(0);
  return f;
}

std::string format_poly(const PermPoly& f) {
  std::ostringstream out;
  out << f.n << ':';
  for (long long c : f.coeffs) out << ' ' << c;
  return out.str();
}

std::string profile_json(const Perm& p) {
  const CosetProfile prof = coset_profile(p);
  const MappingClass mc = classify_mapping(p);
  nlohmann::json j;
  j["n"] = prof.n;
  j["t_coset"] = prof.t_coset;
  auto types = nlohmann::json::array();
  for (const CycleType& t : prof.shift_types) types.push_back(t.parts);
  j["shift_cycle_types"] = std::move(types);
  j["mapping"] = {{"orthomorphism", mc.is_orthomorphism},
                  {"complete", mc.is_complete},
                  {"strong_complete", mc.is_strong_complete}};
  return j.dump();
}

}  // namespace circsort
