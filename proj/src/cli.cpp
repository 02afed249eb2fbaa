#include "qhom/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "qhom/verify.hpp"

namespace qhom {

namespace {

int write_outputs(const CommandResult& res, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  if (res.exit_code == 2) {
    std::cerr << "error: " << res.report.value("error", "invalid configuration") << "\n";
    return 2;
  }
  fs::path dir(cfg.outputDir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory " << dir.string() << "\n";
    return 2;
  }
  for (const auto& [name, content] : res.files) {
    fs::path p = dir / name;
    write_text_file(p.string(), content);
    std::cout << "wrote " << p.string() << "\n";
  }
  return res.exit_code;
}

}  // namespace

int qhom_main(int argc, char** argv) {
  CLI::App app{"exact computations for quantized coordinate rings"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("QHOM_OUTPUT_DIR")) cfg.outputDir = env;

  std::string qstr = "2";
  std::string format = "both";
  std::string twist = "sigma";
  std::string which = "B";
  bool confirm_on = false, confirm_off = false, symbolic = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.N, "matrix size (2 or 3)")->capture_default_str();
    sub->add_option("--q", qstr, "rational value of q, not 0, 1 or -1")->capture_default_str();
    sub->add_option("--nmax", cfg.nMax, "largest homological row (default depends on --n)");
    sub->add_option("--dmax", cfg.dMax, "largest internal degree (default depends on --n)");
    sub->add_option("--center-degree", cfg.centerDegree, "degree bound for the center scan")
        ->capture_default_str();
    sub->add_option("--out", cfg.outputDir, "output directory (default $QHOM_OUTPUT_DIR or .)");
    sub->add_option("--format", format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    sub->add_option("--seed", cfg.seed, "seed recorded in the report")->capture_default_str();
    sub->add_option("--chain-limit", cfg.chainLimit,
                    "largest chain-space dimension the run will attempt")
        ->capture_default_str();
    sub->add_flag("--confirm", confirm_on, "re-run the homology pipeline at the confirmation point");
    sub->add_flag("--no-confirm", confirm_off, "skip the confirmation re-run");
    sub->add_flag("--partial", cfg.partial, "mark the run as an intentionally truncated range");
    sub->add_flag("--allow-uncertified", cfg.allowUncertified,
                  "describe presentations whose confluence is not certified");
  };

  CLI::App* v = app.add_subcommand("verify", "run the full verification suite");
  add_common(v);
  CLI::App* h = app.add_subcommand("homology", "compute a homology table");
  add_common(h);
  h->add_option("--twist", twist, "sigma or none")->check(CLI::IsMember({"sigma", "none"}));
  CLI::App* a = app.add_subcommand("algebra", "print an algebra descriptor");
  add_common(a);
  a->add_flag("--symbolic", symbolic, "keep q symbolic in the descriptor");
  a->add_option("--which", which, "B, A, C, Bdual or D")
      ->check(CLI::IsMember({"B", "A", "C", "Bdual", "D"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.field = symbolic ? ScalarField::symbolic() : ScalarField::specialized(Rat(qstr));
  } catch (const std::exception& e) {
    std::cerr << "error: invalid --q value '" << qstr << "': " << e.what() << "\n";
    return 2;
  }
  cfg.format = format == "json"  ? RunConfig::Format::Json
               : format == "csv" ? RunConfig::Format::Csv
                                 : RunConfig::Format::Both;
  cfg.confirm = confirm_on ? true : (confirm_off ? false : cfg.N == 2);

  try {
    if (v->parsed()) {
      CommandResult res = run_verify(cfg);
      if (res.exit_code != 2) {
        for (const auto& s : res.report["sections"])
          std::cout << "  [" << s["status"].get<std::string>() << "] "
                    << s["name"].get<std::string>() << "\n";
        std::cout << (res.report["pass"].get<bool>() ? "verify: PASS" : "verify: FAIL") << "\n";
      }
      return write_outputs(res, cfg);
    }
    if (h->parsed()) return write_outputs(run_homology(cfg, twist), cfg);
    return write_outputs(run_algebra(cfg, which), cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == Errc::invalid_config || e.code() == Errc::invalid_specialization) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qhom
