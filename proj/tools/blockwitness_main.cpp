#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "blockwitness/report.hpp"
#include "blockwitness/selftest.hpp"

namespace {

using namespace bw;

int default_threads() {
  if (const char* env = std::getenv("BLOCKWITNESS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int status_exit_code(const std::vector<WitnessReport>& reps) {
  bool any_fail = false, any_pass = false;
  for (const auto& r : reps) {
    any_fail |= r.status == Status::Fail;
    any_pass |= r.status == Status::Pass;
  }
  if (any_fail) return 1;
  if (!any_pass) return 2;
  return 0;
}

struct WitnessArgs {
  std::string family;
  long n = 0, p = 0, ell = 0, f = 1;
  bool json = true;
};

int run_witness(const WitnessArgs& args, bool cross_check) {
  Family fam;
  int eps = 1;
  if (args.family == "sn") {
    fam = Family::Symmetric;
  } else if (args.family == "gl" || args.family == "gu") {
    fam = Family::TypeA;
    eps = args.family == "gl" ? 1 : -1;
  } else if (args.family == "bc") {
    fam = Family::TypeBC;
  } else if (args.family == "d") {
    fam = Family::TypeD;
  } else if (args.family == "2d") {
    fam = Family::Type2D;
  } else {
    std::cerr << "unknown family: " << args.family << "\n";
    return 3;
  }
  std::optional<PrimePower> q;
  if (fam != Family::Symmetric) {
    if (args.ell == 0) {
      std::cerr << "family " << args.family << " requires --ell (and optionally --f)\n";
      return 3;
    }
    try {
      q = PrimePower(args.ell, args.f);
    } catch (const std::exception& ex) {
      std::cerr << ex.what() << "\n";
      return 3;
    }
  }
  try {
    WitnessReport rep = fam == Family::TypeA && cross_check
                            ? cross_validate_typeA(args.n, *q, args.p, eps)
                            : verify_witness(fam, args.n, args.p, q, eps);
    if (fam == Family::Symmetric && cross_check) {
      Partition w = witness_partition_Sn(args.n, args.p);
      rep.checks["oracle_member"] = oracle_intersection_member(w, args.n, args.p, 2);
      if (rep.status == Status::Pass && !rep.checks["oracle_member"])
        rep.status = Status::Fail;
    }
    std::cout << to_json_line(rep) << "\n";
    return status_exit_code({rep});
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic block/witness verification for symmetric groups "
               "and classical-type unipotent characters"};
  app.require_subcommand(1);

  WitnessArgs wargs;
  auto add_witness_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", wargs.family, "sn|gl|gu|bc|d|2d")->required();
    cmd->add_option("--n", wargs.n, "rank / number of letters")->required();
    cmd->add_option("--p", wargs.p, "the odd prime p")->required();
    cmd->add_option("--ell", wargs.ell, "defining prime ell");
    cmd->add_option("--f", wargs.f, "exponent f of ell^f");
    cmd->add_flag("--json", wargs.json, "JSON-lines output (default)");
  };
  CLI::App* witness_cmd = app.add_subcommand("witness", "construct and verify one witness");
  add_witness_flags(witness_cmd);
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "witness plus oracle cross-check where available");
  add_witness_flags(verify_cmd);

  std::string conjecture = "a";
  ScanOptions sopt;
  std::string pairs = "with2";
  std::string out_file;
  sopt.threads = default_threads();
  CLI::App* scan_cmd = app.add_subcommand("scan", "conjecture scans over S_n");
  scan_cmd->add_option("--conjecture", conjecture, "a|b|c")->required();
  scan_cmd->add_option("--n-min", sopt.n_min)->required();
  scan_cmd->add_option("--n-max", sopt.n_max)->required();
  scan_cmd->add_option("--pairs", pairs, "with2|odd|all");
  scan_cmd->add_option("--out", out_file, "write report lines to FILE");
  scan_cmd->add_option("--threads", sopt.threads, "worker count");

  long on = 0, op = 0, oq = 0;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive S_n intersection");
  oracle_cmd->add_option("--n", on)->required();
  oracle_cmd->add_option("--p", op)->required();
  oracle_cmd->add_option("--q", oq)->required();

  bool quick = false;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "built-in invariant battery");
  selftest_cmd->add_flag("--quick", quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (app.got_subcommand(witness_cmd)) return run_witness(wargs, false);
  if (app.got_subcommand(verify_cmd)) return run_witness(wargs, true);

  if (app.got_subcommand(scan_cmd)) {
    ConjectureKind kind;
    if (conjecture == "a")
      kind = ConjectureKind::A;
    else if (conjecture == "b")
      kind = ConjectureKind::B;
    else if (conjecture == "c")
      kind = ConjectureKind::C;
    else {
      std::cerr << "unknown conjecture: " << conjecture << "\n";
      return 3;
    }
    if (pairs == "with2")
      sopt.pairs = ScanOptions::Pairs::With2;
    else if (pairs == "odd")
      sopt.pairs = ScanOptions::Pairs::Odd;
    else if (pairs == "all")
      sopt.pairs = ScanOptions::Pairs::All;
    else {
      std::cerr << "unknown pair selection: " << pairs << "\n";
      return 3;
    }
    if (sopt.n_min < 1 || sopt.n_max < sopt.n_min) {
      std::cerr << "invalid n range\n";
      return 3;
    }
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!out_file.empty()) {
      file.open(out_file);
      if (!file) {
        std::cerr << "cannot open " << out_file << "\n";
        return 3;
      }
      sink = &file;
    }
    for (const ScanRow& row : scan_conjectures(kind, sopt)) *sink << to_json_line(row) << "\n";
    return 0;
  }

  if (app.got_subcommand(oracle_cmd)) {
    if (on < 1 || op < 2 || oq < 2 || op == oq) {
      std::cerr << "invalid oracle parameters\n";
      return 3;
    }
    try {
      for (const Partition& la : oracle_intersection_Sn(on, op, oq)) {
        nlohmann::ordered_json j;
        j["n"] = on;
        j["p"] = op;
        j["q"] = oq;
        j["object"] = la.to_string();
        j["degree"] = degree_Sn(la).get_str();
        std::cout << j.dump() << "\n";
      }
    } catch (const std::exception& ex) {
      std::cerr << ex.what() << "\n";
      return 3;
    }
    return 0;
  }

  if (app.got_subcommand(selftest_cmd))
    return run_selftest(std::cout, quick) ? 0 : 1;

  return 3;
}
