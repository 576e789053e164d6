// Command-line front end.
//
//   topes decompose --t 5 --neg 2,4            coefficients of one tope
//   topes count topes --t 4 --ell 3            topes by support size
//   topes count pairs --t 5 --jp 1 --jpp 1 ... pair counts by joint statistic
//   topes count smirnov --start theta --end beta --counts 1,1,1
//   topes count compositions --m 2 --n 4
//   topes verify --t-max 8 --suite all         exhaustive invariant suites
//
// Tables print as CSV (default) or JSON (--format json).  Counts are exact
// and serialized in full decimal.  Exit codes: 0 success, 1 verification
// failure, 2 usage or domain error, 3 enumeration over the configured cap.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topes/checked_int.hpp"
#include "topes/core.hpp"
#include "topes/identities.hpp"
#include "topes/smirnov.hpp"
#include "topes/statistics.hpp"
#include "topes/verify.hpp"

namespace {

using topes::CheckedInt;

// ----- table output -----

struct Cell {
  std::string text;
  bool numeric = false;  // JSON: unquoted

  Cell(std::string s) : text(std::move(s)) {}                        // NOLINT
  Cell(int v) : text(std::to_string(v)), numeric(true) {}            // NOLINT
  Cell(const CheckedInt& v) : text(v.str()) {}                       // NOLINT
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_csv(const Table& table, std::ostream& os) {
  for (std::size_t f = 0; f < table.header.size(); ++f)
    os << (f ? "," : "") << csv_escape(table.header[f]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t f = 0; f < row.size(); ++f) os << (f ? "," : "") << csv_escape(row[f].text);
    os << '\n';
  }
}

void emit_json(const Table& table, std::ostream& os) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t f = 0; f < row.size(); ++f) {
      if (row[f].numeric)
        record[table.header[f]] = std::stoll(row[f].text);
      else
        record[table.header[f]] = row[f].text;
    }
    out.push_back(std::move(record));
  }
  os << out.dump(2) << '\n';
}

void emit(const Table& table, const std::string& format) {
  if (format == "json")
    emit_json(table, std::cout);
  else
    emit_csv(table, std::cout);
}

// ----- argument helpers -----

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
    }
  }
  return out;
}

topes::SubsetMask mask_from_list(const std::vector<int>& elems, int t, const char* what) {
  topes::SubsetMask m;
  for (int e : elems) {
    if (e < 1 || e > t)
      throw std::out_of_range(std::string(what) + ": element " + std::to_string(e) +
                              " outside [1," + std::to_string(t) + "]");
    m.add(e);
  }
  return m;
}

std::vector<int> odd_values_up_to(int t) {
  std::vector<int> out;
  for (int v = 1; v <= t; v += 2) out.push_back(v);
  return out;
}

// ----- commands -----

struct DecomposeArgs {
  int t = 0;
  std::string neg;
};

int cmd_decompose(const DecomposeArgs& args, const std::string& format) {
  topes::SubsetMask a = mask_from_list(parse_int_list(args.neg, "--neg"), args.t, "--neg");
  topes::Tope tope = topes::tope_from_negative_set(args.t, a);
  topes::DecompVector x = topes::decompose(tope);
  topes::QSet q = topes::q_set(tope);

  Table table;
  table.header = {"t", "neg", "tope", "x", "ell", "q"};
  table.add({args.t, a.str(), tope.str(), x.str(), x.support_size(), q.str()});
  emit(table, format);
  return 0;
}

struct CountTopesArgs {
  int t = 0;
  int ell = -1;  // -1: range over all odd values
  int j = -1;    // -1: not filtered by negative part size
};

int cmd_count_topes(const CountTopesArgs& args, const std::string& format) {
  std::vector<int> ells =
      args.ell >= 0 ? std::vector<int>{args.ell} : odd_values_up_to(args.t);
  Table table;
  if (args.j >= 0) {
    table.header = {"t", "j", "ell", "count"};
    for (int ell : ells)
      table.add({args.t, args.j, ell,
                 topes::count_topes_with_negpart_and_qsize(args.t, args.j, ell)});
  } else {
    table.header = {"t", "ell", "count"};
    for (int ell : ells) table.add({args.t, ell, topes::count_topes_with_qsize(args.t, ell)});
  }
  emit(table, format);
  return 0;
}

struct CountPairsArgs {
  int t = 0;
  int jp = 0;
  int jpp = 0;
  int ellp = -1;
  int ellpp = -1;
  int ell = -1;
  std::string boundary_case = "all";
};

int cmd_count_pairs(const CountPairsArgs& args, const std::string& format) {
  std::vector<topes::BoundaryCase> cases;
  bool itemize_total = args.boundary_case == "all";
  if (itemize_total)
    cases.assign(std::begin(topes::kAllBoundaryCases), std::end(topes::kAllBoundaryCases));
  else
    cases.push_back(topes::parse_boundary_case(args.boundary_case));

  auto range = [&](int chosen) {
    return chosen >= 0 ? std::vector<int>{chosen} : odd_values_up_to(args.t);
  };

  Table table;
  table.header = {"t",   "j_prime", "j_double_prime", "ell_prime", "ell_double_prime",
                  "ell", "case",    "count"};
  for (int ellp : range(args.ellp))
    for (int ellpp : range(args.ellpp))
      for (int ell : range(args.ell)) {
        topes::PairQuery q{args.t, args.jp, args.jpp, ellp, ellpp, ell};
        CheckedInt total = 0;
        for (topes::BoundaryCase c : cases) {
          CheckedInt count = topes::count_pairs_case(q, c);
          total += count;
          table.add({args.t, args.jp, args.jpp, ellp, ellpp, ell,
                     std::string(topes::boundary_case_name(c)), count});
        }
        if (itemize_total)
          table.add({args.t, args.jp, args.jpp, ellp, ellpp, ell, std::string("total"), total});
      }
  emit(table, format);
  return 0;
}

struct CountSmirnovArgs {
  std::string start;
  std::string end;
  std::string counts;
  std::string method = "closed";
};

int cmd_count_smirnov(const CountSmirnovArgs& args, const std::string& format) {
  topes::Letter start = topes::parse_letter(args.start);
  topes::Letter end = topes::parse_letter(args.end);
  std::vector<int> k = parse_int_list(args.counts, "--counts");
  if (k.size() != 3)
    throw std::invalid_argument("--counts expects exactly three values, e.g. 1,1,1");
  topes::LetterCounts counts{k[0], k[1], k[2]};

  CheckedInt count = args.method == "dp" ? topes::smirnov_count_dp(start, end, counts)
                                         : topes::smirnov_count_closed(start, end, counts);
  Table table;
  table.header = {"start", "end", "n_theta", "n_alpha", "n_beta", "count"};
  table.add({std::string(topes::letter_name(start)), std::string(topes::letter_name(end)),
             counts.n_theta, counts.n_alpha, counts.n_beta, count});
  emit(table, format);
  return 0;
}

struct CountCompositionsArgs {
  int m = 0;
  int n = 0;
};

int cmd_count_compositions(const CountCompositionsArgs& args, const std::string& format) {
  Table table;
  table.header = {"m", "n", "count"};
  table.add({args.m, args.n, topes::composition_count(args.m, args.n)});
  emit(table, format);
  return 0;
}

struct VerifyArgs {
  int t_max = 0;
  std::string suite = "all";
  int threads = 1;
  int unsafe_cap = 0;  // 0: keep default caps
};

int cmd_verify(const VerifyArgs& args) {
  topes::VerifyOptions opt;
  opt.t_max = args.t_max;
  opt.threads = args.threads;
  if (args.unsafe_cap > 0) {
    opt.cap_pow2 = args.unsafe_cap;
    opt.cap_pow3 = args.unsafe_cap;
  }

  bool all_passed = true;
  for (topes::Suite s : topes::parse_suites(args.suite)) {
    topes::VerifyReport report = topes::run_suite(s, opt);
    std::cout << "suite " << report.suite << ": " << report.checks << " checks, "
              << report.failure_count << " failures ["
              << (report.passed() ? "PASS" : "FAIL") << "]\n";
    for (const std::string& note : report.notes) std::cout << "  " << note << '\n';
    for (const std::string& bad : report.counterexamples)
      std::cout << "  counterexample: " << bad << '\n';
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tope decompositions over the distinguished symmetric cycle"};
  app.require_subcommand(1);

  std::string format = "csv";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  DecomposeArgs dec;
  CLI::App* cmd_dec = app.add_subcommand("decompose", "coefficients of one tope");
  cmd_dec->add_option("--t", dec.t, "ground size")->required();
  cmd_dec->add_option("--neg", dec.neg, "negative entries, comma separated");

  CLI::App* cmd_count = app.add_subcommand("count", "exact counts");
  cmd_count->require_subcommand(1);

  CountTopesArgs ct;
  CLI::App* cmd_ct = cmd_count->add_subcommand("topes", "topes by support size");
  cmd_ct->add_option("--t", ct.t, "ground size")->required();
  cmd_ct->add_option("--ell", ct.ell, "support size (default: all odd values)");
  cmd_ct->add_option("--j", ct.j, "negative part size filter");

  CountPairsArgs cp;
  CLI::App* cmd_cp = cmd_count->add_subcommand("pairs", "disjoint pairs by joint statistic");
  cmd_cp->add_option("--t", cp.t, "ground size")->required();
  cmd_cp->add_option("--jp", cp.jp, "size of the first set")->required();
  cmd_cp->add_option("--jpp", cp.jpp, "size of the second set")->required();
  cmd_cp->add_option("--ellp", cp.ellp, "support size of the first set's tope");
  cmd_cp->add_option("--ellpp", cp.ellpp, "support size of the second set's tope");
  cmd_cp->add_option("--ell", cp.ell, "support size of the union's tope");
  cmd_cp->add_option("--case", cp.boundary_case, "boundary case i..ix, or all")
      ->capture_default_str();

  CountSmirnovArgs cs;
  CLI::App* cmd_cs = cmd_count->add_subcommand("smirnov", "words without equal adjacent letters");
  cmd_cs->add_option("--start", cs.start, "first letter: theta|alpha|beta")->required();
  cmd_cs->add_option("--end", cs.end, "last letter: theta|alpha|beta")->required();
  cmd_cs->add_option("--counts", cs.counts, "multiplicities n_theta,n_alpha,n_beta")->required();
  cmd_cs->add_option("--method", cs.method, "closed|dp")
      ->check(CLI::IsMember({"closed", "dp"}))
      ->capture_default_str();

  CountCompositionsArgs cc;
  CLI::App* cmd_cc = cmd_count->add_subcommand("compositions", "compositions into positive parts");
  cmd_cc->add_option("--m", cc.m, "number of parts")->required();
  cmd_cc->add_option("--n", cc.n, "total")->required();

  VerifyArgs ver;
  CLI::App* cmd_ver = app.add_subcommand("verify", "run exhaustive invariant suites");
  cmd_ver->add_option("--t-max", ver.t_max, "largest ground size / word total")->required();
  cmd_ver->add_option("--suite", ver.suite, "decomp|identities|smirnov|pairs|all")
      ->capture_default_str();
  cmd_ver->add_option("--threads", ver.threads, "worker count for enumerations")
      ->capture_default_str();
  cmd_ver->add_option("--unsafe-cap", ver.unsafe_cap,
                      "replace the default enumeration caps (may run very long)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_dec) return cmd_decompose(dec, format);
    if (*cmd_ct) return cmd_count_topes(ct, format);
    if (*cmd_cp) return cmd_count_pairs(cp, format);
    if (*cmd_cs) return cmd_count_smirnov(cs, format);
    if (*cmd_cc) return cmd_count_compositions(cc, format);
    if (*cmd_ver) return cmd_verify(ver);
    std::cerr << "error: no command selected\n";
    return 2;
  } catch (const topes::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
