#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "permdepth/distribution.hpp"
#include "permdepth/motzkin.hpp"
#include "permdepth/permutation.hpp"
#include "permdepth/phi_map.hpp"

namespace permdepth::cli {
namespace {

// bfile applies only to triangle output; the other two are general row
// encodings.
enum class OutputFormat { tsv, json, bfile };

OutputFormat format_from_name(const std::string& name) {
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void emit_tsv(const DepthTable& t, std::ostream& out) {
  for (int n = 0; n <= t.max_n(); ++n) {
    out << n;
    for (const BigInt& v : t.rows[n]) out << '\t' << v.get_str();
    out << '\n';
  }
}

// Counts overflow 53-bit JSON numbers from n = 19 on, so every value is
// emitted as a decimal string.
void emit_json(const DepthTable& t, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n <= t.max_n(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (const BigInt& v : t.rows[n]) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  out << rows.dump() << '\n';
}

// OEIS b-file lines: a running 1-based index and the triangle read by
// rows starting at n = 1 (the triangle's offset in the OEIS).
void emit_bfile(const DepthTable& t, std::ostream& out) {
  long long index = 1;
  for (int n = 1; n <= t.max_n(); ++n)
    for (const BigInt& v : t.rows[n]) out << index++ << ' ' << v.get_str() << '\n';
}

int cmd_table(int n, const std::string& method, const std::string& format,
              bool force, int jobs, std::ostream& out) {
  TableOptions opts{force, jobs};
  DepthTable t = [&] {
    switch (method_from_name(method)) {
      case Method::brute: return table_brute(n, opts);
      case Method::motzkin: return table_motzkin(n, opts);
      case Method::jfrac: return table_jfrac(n);
      default: return table_sfrac(n);
    }
  }();
  switch (format_from_name(format)) {
    case OutputFormat::tsv: emit_tsv(t, out); break;
    case OutputFormat::json: emit_json(t, out); break;
    case OutputFormat::bfile: emit_bfile(t, out); break;
  }
  return 0;
}

int cmd_depth(const std::string& text, std::ostream& out) {
  Permutation w = parse_permutation(text);
  MotzkinPath p = phi(w);
  out << "depth " << depth(w) << '\n';
  out << "displacement " << total_displacement(w) << '\n';
  out << "path " << p.str() << '\n';
  out << "area " << area(p) << '\n';
  return 0;
}

int cmd_preimage(const std::string& text, bool list, bool force,
                 std::ostream& out) {
  MotzkinPath p = parse_path(text);
  out << preimage_count(p).get_str() << '\n';
  if (list)
    enumerate_preimage(
        p, [&](const Permutation& w) { out << w.str() << '\n'; }, force);
  return 0;
}

int cmd_poly(int k, int n_max, std::ostream& out) {
  BinomialPolynomial poly = fixed_depth_polynomial(k, n_max);
  for (size_t j = 0; j < poly.coefficients.size(); ++j) {
    if (j) out << ' ';
    out << poly.coefficients[j].get_str();
  }
  out << '\n';
  out << "verified exactly for " << k << " <= n <= " << poly.verified_n_max
      << '\n';
  return 0;
}

int cmd_check(int n, bool force, int jobs, std::ostream& out) {
  TableOptions opts{true, jobs};
  const int brute_n =
      std::min(n, force ? 20 : kBruteTableCeiling);
  const int motzkin_n =
      std::min(n, force ? kPathEnumerationCeiling : kMotzkinTableCeiling);
  out << "methods: brute n<=" << brute_n << ", motzkin n<=" << motzkin_n
      << ", jfrac n<=" << n << ", sfrac n<=" << n << '\n';

  DepthTable ref = table_jfrac(n);
  DepthTable others[3] = {table_sfrac(n), table_brute(brute_n, opts),
                          table_motzkin(motzkin_n, opts)};
  bool ok = true;

  for (const DepthTable& t : others) {
    for (int m = 0; m <= t.max_n() && ok; ++m)
      for (size_t k = 0; k < t.rows[m].size(); ++k)
        if (t.rows[m][k] != ref.rows[m][k]) {
          out << "MISMATCH at n=" << m << " k=" << k << ": "
              << method_name(t.method) << "=" << t.rows[m][k].get_str()
              << " jfrac=" << ref.rows[m][k].get_str() << '\n';
          ok = false;
          break;
        }
  }
  out << "method agreement: " << (ok ? "ok" : "FAILED") << '\n';

  bool sums_ok = true;
  for (int m = 0; m <= n; ++m) {
    BigInt sum = 0;
    for (const BigInt& v : ref.rows[m]) sum += v;
    if (sum != factorial(m)) {
      out << "MISMATCH row sum at n=" << m << ": " << sum.get_str() << '\n';
      sums_ok = false;
    }
  }
  out << "row sums equal n!: " << (sums_ok ? "ok" : "FAILED") << '\n';

  bool max_ok = true;
  for (int m = 1; m <= n; ++m)
    if (ref.rows[m].back() != max_depth_count(m)) {
      out << "MISMATCH max-depth count at n=" << m << '\n';
      max_ok = false;
    }
  out << "max-depth counts (k!)^2 / n(k!)^2: " << (max_ok ? "ok" : "FAILED")
      << '\n';

  bool low_ok = true;
  for (int m = 0; m <= n; ++m) {
    if (ref.rows[m][0] != 1) low_ok = false;
    if (m >= 2 && ref.rows[m][1] != m - 1) low_ok = false;
  }
  out << "H(n,0)=1 and H(n,1)=n-1: " << (low_ok ? "ok" : "FAILED") << '\n';

  // Not promised anywhere, so a zero inside a row is reported but does
  // not fail the check.
  long long zeros = 0;
  for (int m = 0; m <= n; ++m)
    for (const BigInt& v : ref.rows[m])
      if (v == 0) ++zeros;
  if (zeros > 0)
    out << "note: " << zeros << " zero count(s) inside the triangle\n";

  const bool all_ok = ok && sums_ok && max_ok && low_ok;
  out << (all_ok ? "check passed" : "check FAILED") << " (n <= " << n << ")\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Distribution of permutation depth (half of total displacement) "
      "over S_n, computed by exhaustive tally, by weighted Motzkin paths, "
      "and by two continued-fraction expansions of the generating "
      "function. The triangle is OEIS A062869."};
  app.require_subcommand(1);

  int table_n = 0;
  std::string method = "jfrac";
  std::string format = "tsv";
  bool table_force = false;
  int table_jobs = 1;
  auto* table = app.add_subcommand(
      "table", "Print the triangle H(n, k) for rows 0..n");
  table->add_option("--n", table_n, "Largest row to compute")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table
      ->add_option("--method", method,
                   "brute (ceiling n=9), motzkin (ceiling n=16), jfrac or "
                   "sfrac (no ceiling)")
      ->check(CLI::IsMember({"brute", "motzkin", "jfrac", "sfrac"}));
  table
      ->add_option("--format", format,
                   "tsv: 'n<TAB>counts...'; json: array of arrays of "
                   "decimal strings; bfile: OEIS b-file lines for rows "
                   "n >= 1")
      ->check(CLI::IsMember({"tsv", "json", "bfile"}));
  table->add_flag("--force", table_force, "Override the method ceiling");
  table->add_option("--jobs", table_jobs,
                    "Parallel partitions for brute/motzkin (output is "
                    "identical for any value)");

  std::string perm_text;
  auto* depth_cmd = app.add_subcommand(
      "depth", "Depth, total displacement, and Motzkin path of a permutation");
  depth_cmd
      ->add_option("perm", perm_text,
                   "One-line notation: digits for n <= 9 (e.g. 3715246) or "
                   "comma/space-separated values")
      ->required();

  std::string path_text;
  bool list = false;
  bool preimage_force = false;
  auto* preimage_cmd = app.add_subcommand(
      "preimage", "Number of permutations mapping to a Motzkin path");
  preimage_cmd->add_option("path", path_text, "Word over U, D, H")->required();
  preimage_cmd->add_flag("--list", list, "Also list the permutations");
  preimage_cmd->add_flag("--force", preimage_force,
                         "Allow fibers above 10^6 members");

  int poly_k = 0;
  int poly_nmax = 40;
  auto* poly_cmd = app.add_subcommand(
      "poly",
      "Coefficients a_j with H(n, k) = sum a_j * C(n-k, j) for n >= k");
  poly_cmd->add_option("--k", poly_k, "Fixed depth")
      ->required()
      ->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--nmax", poly_nmax,
                       "Verify the polynomial up to this n (needs >= 2k+3)");

  int check_n = 0;
  bool check_force = false;
  int check_jobs = 1;
  auto* check_cmd = app.add_subcommand(
      "check", "Cross-validate all methods and the closed-form row facts");
  check_cmd->add_option("--n", check_n, "Largest row to validate")
      ->required()
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--force", check_force,
                      "Push brute/motzkin past their default ceilings");
  check_cmd->add_option("--jobs", check_jobs, "Parallel partitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(table))
      return cmd_table(table_n, method, format, table_force, table_jobs, out);
    if (app.got_subcommand(depth_cmd)) return cmd_depth(perm_text, out);
    if (app.got_subcommand(preimage_cmd))
      return cmd_preimage(path_text, list, preimage_force, out);
    if (app.got_subcommand(poly_cmd)) return cmd_poly(poly_k, poly_nmax, out);
    if (app.got_subcommand(check_cmd))
      return cmd_check(check_n, check_force, check_jobs, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"permdepth"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace permdepth::cli
