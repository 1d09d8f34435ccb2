#include "dihedral/cli.hpp"

#include "dihedral/certificate.hpp"
#include "dihedral/construction.hpp"
#include "dihedral/group_word.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>

namespace dihedral {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

AffineAuto element_from_label(const WordLabel& label, const DihedralAction& action) {
  const auto& lattice = action.lattice;
  return compose(power(action.r, label.rotation, lattice), power(action.s, label.reflection, lattice), lattice);
}

struct VerifyOptions {
  int n = 0;
  int range = 0;
  std::string json_path;
  std::size_t closure_cap = 0;
  std::size_t oracle = 0;
  std::size_t oracle_budget = 10'000'000;
  bool timing = false;
};

struct ElementOptions {
  int n = 0;
  std::string word;
  std::size_t oracle = 0;
  std::size_t oracle_budget = 10'000'000;
};

struct CorollaryOptions {
  int k = 0;
  std::string json_path;
  bool timing = false;
};

void print_theorem(const TheoremCertificate& cert, std::ostream& out) {
  out << "n = " << cert.n << ": dihedral group D_" << 4 * cert.n << " of order " << cert.group_order_expected
      << " on a torus of dimension " << cert.dimension << "\n";
  out << "  group order:  " << cert.group_order_actual << "\n";
  out << "  step 1 (rotations: order " << cert.step1.rotation_order << ", r^j free, no translations): "
      << pass_fail(cert.step1.passed) << "\n";
  out << "  step 2 (s^2 = w-translation on the cover, S(w) = w, s of order " << cert.step2.order
      << "): " << pass_fail(cert.step2.passed) << "\n";
  out << "  step 3 (r^" << 4 * cert.n << " = s^2 = (rs)^2 = 1): " << pass_fail(cert.step3.passed) << "\n";
  out << "  step 4 (symmetries not translations; " << cert.step4.class_count
      << " conjugacy classes of symmetries): " << pass_fail(cert.step4.passed) << "\n";
  out << "  step 5 (s and rs fixed-point free): " << pass_fail(cert.step5.passed) << "\n";
  out << "  free: " << yes_no(cert.is_free) << ", translation-free: " << yes_no(cert.has_no_translations) << "\n";
  if (!cert.failure.empty()) out << "  failure: " << cert.failure << "\n";
  out << "  theorem verified: " << yes_no(cert.theorem_verified) << "\n";
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.range == 0 && opt.n < 1) {
    err << "error: --n must be a positive integer\n";
    return kExitUsage;
  }
  if (opt.range < 0) {
    err << "error: --range must be a positive integer\n";
    return kExitUsage;
  }

  const auto start = Clock::now();
  const int first = opt.range > 0 ? 1 : opt.n;
  const int last = opt.range > 0 ? opt.range : opt.n;
  std::vector<Json> runs;
  bool all_verified = true;
  bool oracle_ok = true;

  for (int n = first; n <= last; ++n) {
    const auto run_start = Clock::now();
    VerifyMetadata meta{default_caps(n), std::nullopt};
    if (opt.closure_cap > 0) meta.caps.closure = opt.closure_cap;
    if (opt.oracle > 0) meta.oracle_denominator = opt.oracle;

    const TheoremCertificate cert = verify_theorem({n}, {}, meta.caps);
    print_theorem(cert, out);

    std::vector<OracleResult> oracle;
    if (opt.oracle > 0) {
      const DihedralAction action = build_action({n});
      for (const auto& report : cert.elements) {
        if (!report.word) break;
        const auto points = torsion_fixed_points_bruteforce(element_from_label(*report.word, action),
                                                            action.lattice, opt.oracle, opt.oracle_budget);
        const bool agrees = !points.empty() == report.has_fixed_point;
        oracle.push_back({points.size(), agrees});
        oracle_ok = oracle_ok && agrees;
      }
      out << "  oracle (D = " << opt.oracle << "): " << (oracle_ok ? "agrees" : "DISAGREES") << "\n";
    }

    all_verified = all_verified && cert.theorem_verified;
    std::optional<double> elapsed;
    if (opt.timing) elapsed = millis_since(run_start);
    runs.push_back(theorem_document(cert, meta, oracle, elapsed));
  }

  const double total_ms = millis_since(start);
  out << "elapsed: " << total_ms << " ms\n";

  if (!opt.json_path.empty()) {
    std::optional<double> elapsed;
    if (opt.timing) elapsed = total_ms;
    const Json doc = opt.range > 0 ? range_document(opt.range, runs, all_verified, elapsed) : runs.front();
    if (!write_file(opt.json_path, render(doc), err)) return kExitUsage;
  }
  return all_verified && oracle_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_corollary(const CorollaryOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.k < 1) {
    err << "error: --k must be a positive integer\n";
    return kExitUsage;
  }
  const auto start = Clock::now();
  const CorollaryPlan plan = build_corollary(opt.k);
  const AnalysisCaps caps = default_caps(plan.params.n);
  const CorollaryCertificate cert = verify_corollary(opt.k, caps);
  const double ms = millis_since(start);

  out << "k = " << opt.k << ": D_" << opt.k << " of order " << plan.expected_order << " inside D_"
      << 4 * plan.params.n << " (n = " << plan.params.n << "), rotation generator r^" << plan.rotation_power
      << "\n";
  out << "  ambient dimension: " << cert.ambient_dimension << " (expected lcm(4, k)/2 + 1 = "
      << plan.expected_dimension << ")\n";
  out << "  subgroup order:    " << cert.subgroup_order << "\n";
  out << "  relations:         " << pass_fail(cert.relations_hold) << "\n";
  out << "  free: " << yes_no(cert.is_free) << ", translation-free: " << yes_no(cert.has_no_translations) << "\n";
  if (!cert.failure.empty()) out << "  failure: " << cert.failure << "\n";
  out << "  corollary verified: " << yes_no(cert.verified) << "\n";
  out << "elapsed: " << ms << " ms\n";

  if (!opt.json_path.empty()) {
    std::optional<double> elapsed;
    if (opt.timing) elapsed = ms;
    if (!write_file(opt.json_path, render(corollary_document(cert, caps, elapsed)), err)) return kExitUsage;
  }
  return cert.verified ? kExitOk : kExitVerificationFailed;
}

void print_matrix(const RatMatrix& m, std::ostream& out) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : m.data()) {
    cells.push_back(x.get_str());
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      out << ' ' << std::string(width - c.size(), ' ') << c;
    }
    out << " ]\n";
  }
}

int cmd_element(const ElementOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) {
    err << "error: --n must be a positive integer\n";
    return kExitUsage;
  }
  GroupWord word;
  try {
    word = parse_word(opt.word);
  } catch (const WordParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const DihedralAction action = build_action({opt.n});
  const AnalysisCaps caps = default_caps(opt.n);
  out << "word: \"" << opt.word << "\" (maps applied right to left)\n";

  struct View {
    const char* name;
    const EnlargedLattice& lattice;
    const AffineAuto& r;
    const AffineAuto& s;
  };
  const View views[] = {{"A = (E^2n x E')/<w>", action.lattice, action.r, action.s},
                        {"A' = E^2n x E'", action.cover, action.r_cover, action.s_cover}};

  int code = kExitOk;
  for (const auto& view : views) {
    try {
      const AffineAuto g = evaluate_word(word, view.r, view.s, view.lattice, caps.order);
      const bool fixed = exists_fixed_point(g, view.lattice);
      out << view.name << ":\n";
      out << "  linear part:\n";
      print_matrix(g.linear, out);
      out << "  translation: " << g.translation.to_string() << "\n";
      out << "  order: " << order(g, view.lattice, caps.order) << "\n";
      out << "  translation element: " << yes_no(is_translation(g, view.lattice)) << "\n";
      out << "  fixed point: " << yes_no(fixed) << "\n";
      if (opt.oracle > 0 && &view == &views[0]) {
        const auto points = torsion_fixed_points_bruteforce(g, view.lattice, opt.oracle, opt.oracle_budget);
        const bool agrees = !points.empty() == fixed;
        out << "  oracle (D = " << opt.oracle << "): " << points.size() << " torsion fixed points, "
            << (agrees ? "agrees" : "DISAGREES") << "\n";
        if (!agrees) code = kExitVerificationFailed;
      }
    } catch (const CapExceeded& e) {
      err << "error: " << e.what() << "\n";
      return kExitVerificationFailed;
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of free dihedral actions on abelian varieties"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the D_4n action of order 8n on (E^2n x E')/<w>");
  verify_cmd->add_option("--n", verify.n, "construction parameter n >= 1");
  verify_cmd->add_option("--range", verify.range, "verify every n = 1..N instead of a single n");
  verify_cmd->add_option("--json", verify.json_path, "write the JSON certificate to this path");
  verify_cmd->add_option("--closure-cap", verify.closure_cap, "maximum group size explored (default 32n)");
  verify_cmd->add_option("--oracle", verify.oracle, "cross-check fixed points on the (1/D)-torsion grid");
  verify_cmd->add_option("--oracle-budget", verify.oracle_budget, "maximum grid points the oracle may visit");
  verify_cmd->add_flag("--timing", verify.timing, "record elapsed_ms in the JSON certificate");

  CorollaryOptions corollary;
  auto* corollary_cmd = app.add_subcommand("corollary", "Verify the free action of D_k of order 2k");
  corollary_cmd->add_option("--k", corollary.k, "dihedral parameter k >= 1")->required();
  corollary_cmd->add_option("--json", corollary.json_path, "write the JSON certificate to this path");
  corollary_cmd->add_flag("--timing", corollary.timing, "record elapsed_ms in the JSON certificate");

  ElementOptions element;
  auto* element_cmd = app.add_subcommand("element", "Inspect one group element given as a word in r and s");
  element_cmd->add_option("--n", element.n, "construction parameter n >= 1")->required();
  element_cmd->add_option("--word", element.word, "word such as \"r^2 s\"; empty for the identity")->required();
  element_cmd->add_option("--oracle", element.oracle, "cross-check fixed points on the (1/D)-torsion grid");
  element_cmd->add_option("--oracle-budget", element.oracle_budget, "maximum grid points the oracle may visit");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*corollary_cmd) return cmd_corollary(corollary, out, err);
    return cmd_element(element, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }
}

}  // namespace dihedral
