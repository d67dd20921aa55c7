#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circsort/bounds.hpp"
#include "circsort/constructions.hpp"
#include "circsort/io.hpp"
#include "circsort/search.hpp"

namespace {

using namespace circsort;

int cmd_verify(const std::string& file, bool json) {
  const VerifyReport rep = verify_witness(file);
  if (json) {
    std::cout << profile_json(rep.perm) << "\n";
  } else {
    std::cout << "n: " << rep.profile.n << "\n";
    std::cout << "t_coset: " << rep.profile.t_coset << "\n";
    std::cout << "shift cycle counts:";
    for (int k = 0; k < rep.profile.n; ++k)
      std::cout << ' ' << rep.profile.cycles(k);
    std::cout << "\n";
    std::cout << "orthomorphism: " << (rep.mapping.is_orthomorphism ? "yes" : "no")
              << ", complete: " << (rep.mapping.is_complete ? "yes" : "no")
              << ", strong complete: "
              << (rep.mapping.is_strong_complete ? "yes" : "no") << "\n";
    if (rep.expect_t)
      std::cout << "expected t>=" << *rep.expect_t << ": "
                << (rep.ok ? "ok" : "FAILED") << "\n";
  }
  return rep.ok ? 0 : 1;
}

void print_witnesses(const std::vector<Perm>& ws, bool json) {
  for (const Perm& w : ws) {
    if (json)
      std::cout << profile_json(w) << "\n";
    else
      std::cout << format_perm(w) << "\n";
  }
}

std::vector<int> parse_prefix(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular sorting numbers: exact values, bounds, witnesses"};
  app.require_subcommand(1);

  // verify FILE [--json]
  std::string verify_file;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "verify a permutation file");
  verify->add_option("file", verify_file)->required();
  verify->add_flag("--json", verify_json);

  // t exact N / t bounds N
  auto* t_cmd = app.add_subcommand("t", "circular sorting number t(n)");
  t_cmd->require_subcommand(1);
  int exact_n = 0, exact_threads = 1;
  auto* t_exact = t_cmd->add_subcommand("exact", "exact t(n) by search");
  t_exact->add_option("n", exact_n)->required();
  t_exact->add_option("--threads", exact_threads);
  int bounds_n = 0;
  std::string bounds_dir;
  auto* t_bounds_cmd = t_cmd->add_subcommand("bounds", "certified bounds");
  t_bounds_cmd->add_option("n", bounds_n)->required();
  t_bounds_cmd->add_option("--witness-dir", bounds_dir);

  // construct {affine|quadratic|product|pq5|pq3}
  auto* con = app.add_subcommand("construct", "lower-bound constructions");
  con->require_subcommand(1);
  int ca_n = 0, ca_a = 1, ca_b = 0;
  std::string ca_out;
  auto* c_aff = con->add_subcommand("affine", "x -> a*x + b on Z_n");
  c_aff->add_option("n", ca_n)->required();
  c_aff->add_option("a", ca_a)->required();
  c_aff->add_option("b", ca_b);
  c_aff->add_option("--out", ca_out)->required();
  int cq_a = 0, cq_b = 0, cq_p = 0;
  std::string cq_out;
  auto* c_quad = con->add_subcommand("quadratic", "square/non-square multiplier map");
  c_quad->add_option("a", cq_a)->required();
  c_quad->add_option("b", cq_b)->required();
  c_quad->add_option("p", cq_p)->required();
  c_quad->add_option("--out", cq_out)->required();
  std::string cp_outer, cp_fiber, cp_out;
  auto* c_prod = con->add_subcommand("product", "wreath product of two witnesses");
  c_prod->add_option("outer", cp_outer)->required();
  c_prod->add_option("fiber", cp_fiber)->required();
  c_prod->add_option("--out", cp_out)->required();
  int c5_p = 0, c5_q = 0;
  std::string c5_out;
  auto* c_pq5 = con->add_subcommand("pq5", "t(pq) >= pq-5 witness");
  c_pq5->add_option("p", c5_p)->required();
  c_pq5->add_option("q", c5_q)->required();
  c_pq5->add_option("--out", c5_out)->required();
  int c3_p = 0, c3_q = 0;
  std::string c3_out;
  auto* c_pq3 = con->add_subcommand("pq3", "t(pq) >= pq-3 witness");
  c_pq3->add_option("p", c3_p)->required();
  c_pq3->add_option("q", c3_q)->required();
  c_pq3->add_option("--out", c3_out)->required();

  // search scm N / search avoid N
  auto* search = app.add_subcommand("search", "backtracking enumerators");
  search->require_subcommand(1);
  int s_n = 0, s_threads = 1;
  bool s_count = false, s_target = false, s_slope = false, s_json = false;
  std::string s_prefix;
  auto* s_scm = search->add_subcommand("scm", "strong complete mappings with f(0)=0");
  s_scm->add_option("n", s_n)->required();
  s_scm->add_flag("--count", s_count, "print only the count");
  s_scm->add_flag("--target-n2", s_target, "keep only all-shifts (1,n-1) candidates");
  s_scm->add_flag("--normalize-slope", s_slope);
  s_scm->add_option("--prefix", s_prefix, "fix f(1),f(2),... as v1,v2,...");
  s_scm->add_option("--threads", s_threads);
  s_scm->add_flag("--json", s_json);
  int a_n = 0, a_L = 0, a_threads = 1;
  bool a_json = false;
  auto* s_avoid = search->add_subcommand("avoid", "orthomorphisms avoiding short cycles");
  s_avoid->add_option("n", a_n)->required();
  s_avoid->add_option("--max-cycle", a_L)->required();
  s_avoid->add_option("--threads", a_threads);
  s_avoid->add_flag("--json", a_json);

  // table
  int table_max = 44;
  std::string table_dir;
  auto* table = app.add_subcommand("table", "composite-n bounds table");
  table->add_option("--max", table_max);
  table->add_option("--witness-dir", table_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(verify_file, verify_json);
    if (*t_exact) {
      std::cout << "t(" << exact_n << ") = " << exhaustive_t(exact_n) << "\n";
      return 0;
    }
    if (*t_bounds_cmd) {
      const BoundsReport rep = t_bounds(bounds_n, bounds_dir);
      std::cout << "t(" << rep.n << ") in [" << rep.lower << ", " << rep.upper
                << "]" << (rep.exact ? " (exact)" : "") << "\n";
      std::cout << "lower: " << to_string(rep.lower_provenance)
                << ", upper: " << to_string(rep.upper_provenance) << "\n";
      if (rep.witness)
        std::cout << "witness: " << format_perm(*rep.witness) << "\n";
      return 0;
    }
    if (*c_aff) {
      const Perm p = affine_perm({ca_n, ca_a, ca_b});
      write_perm_file(ca_out, p, t_coset(p));
      return 0;
    }
    if (*c_quad) {
      const Perm p = quadratic_map(cq_a, cq_b, cq_p);
      write_perm_file(cq_out, p, t_coset(p));
      return 0;
    }
    if (*c_prod) {
      const Perm outer = read_perm_file(cp_outer).perm;
      const Perm fiber = read_perm_file(cp_fiber).perm;
      const Perm flat = wreath_flatten(construct_product(outer, fiber));
      write_perm_file(cp_out, flat, t_coset(flat));
      return 0;
    }
    if (*c_pq5) {
      const auto [cfg, elem] = construct_pq5(c5_p, c5_q);
      const Perm flat = wreath_flatten(elem);
      const int t = t_coset(flat);
      if (t < c5_p * c5_q - 5)
        throw SolverFailed("pq5 witness below the guaranteed bound");
      write_perm_file(c5_out, flat, t);
      return 0;
    }
    if (*c_pq3) {
      const Pq3Witness w = construct_pq3(c3_p, c3_q);
      const Perm flat = wreath_flatten(w.element);
      write_perm_file(c3_out, flat, c3_p * c3_q - 3);
      return 0;
    }
    if (*s_scm) {
      ScmSearchConfig cfg;
      cfg.n = s_n;
      cfg.constraint = SearchConstraint::StrongComplete;
      cfg.mode = s_count ? SearchMode::Count : SearchMode::Collect;
      if (s_target) cfg.target = SearchTarget::all_shifts_n_minus_1();
      cfg.slope_normalize = s_slope;
      if (!s_prefix.empty()) cfg.prefix = parse_prefix(s_prefix);
      const SearchOutcome out =
          (s_threads > 1 && s_prefix.empty())
              ? scm_enumerate_parallel(cfg, s_threads)
              : scm_enumerate(cfg);
      if (s_count)
        std::cout << out.count << "\n";
      else
        print_witnesses(out.witnesses, s_json);
      return 0;
    }
    if (*s_avoid) {
      const auto ws = avoid_cycle_search(a_n, a_L);
      print_witnesses(ws, a_json);
      return 0;
    }
    if (*table) {
      std::cout << run_table(table_max, table_dir);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidWitness& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
