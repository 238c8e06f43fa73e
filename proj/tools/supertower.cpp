// Command-line front end: normalize, analyze, batch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "supertower/errors.hpp"
#include "supertower/report.hpp"

namespace st = supertower;

namespace {

int diagnose(const std::string& kind, std::string message, int code) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  std::cerr << "supertower: " << kind << ": " << message << "\n";
  return code;
}

bool emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion-field analysis for superelliptic curves y^(ell^n) = lambda f(x)"};
  app.set_version_flag("--version", st::kToolVersion);
  app.require_subcommand(1);

  bool assert_splits = false;
  app.add_flag("--assert-splits-over-ten", assert_splits,
               "treat the splitting of every factor over the ell-adic unramified tower as given");

  std::string file;
  std::string out_path;

  auto* norm = app.add_subcommand("normalize", "print the normalized model as JSON");
  norm->add_option("file", file, "curve file")->required();
  norm->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "run the full analysis and print the report");
  analyze->add_option("file", file, "curve file")->required();
  analyze->add_option("--report", out_path, "write the report here instead of stdout");

  std::string dir;
  int jobs = 1;
  std::string out_dir;
  auto* batch = app.add_subcommand("batch", "analyze every *.curve file in a directory");
  batch->add_option("dir", dir, "input directory")->required();
  batch->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  batch->add_option("--summary", out_path, "write the summary here instead of stdout");
  batch->add_option("--out-dir", out_dir, "also write one <stem>.report.json per input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return diagnose("usage error", e.what(), st::kExitParse);
  }

  st::AnalysisOptions options;
  options.assert_splits = assert_splits;
  try {
    int code = st::kExitOk;
    std::string text;
    if (*norm) {
      text = st::dump(st::normalize_report(st::load_curve_file(file)));
    } else if (*analyze) {
      const st::Analysis a = st::analyze(st::load_curve_file(file), options);
      text = st::dump(a.report);
      code = st::exit_code(a.verdict);
    } else {
      st::BatchOptions b;
      b.jobs = jobs;
      b.analysis = options;
      if (!out_dir.empty()) b.out_dir = out_dir;
      const st::BatchResult r = st::run_batch(dir, b);
      text = st::dump(r.summary);
      code = r.exit_code;
    }
    if (!emit(text, out_path)) return diagnose("io error", "cannot write " + out_path, st::kExitParse);
    return code;
  } catch (const st::ParseError& e) {
    return diagnose("parse error", e.what(), st::kExitParse);
  } catch (const st::ArgumentError& e) {
    return diagnose("usage error", e.what(), st::kExitParse);
  } catch (const st::ValidationError& e) {
    return diagnose("validation error", e.what(), st::kExitValidation);
  } catch (const st::DomainError& e) {
    return diagnose("validation error", e.what(), st::kExitValidation);
  } catch (const std::exception& e) {
    return diagnose("internal error", e.what(), st::kExitNegative);
  }
}
