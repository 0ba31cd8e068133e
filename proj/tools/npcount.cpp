// npcount: exact and asymptotic counts of Newton polygons.
//
//   npcount count --range half-open --max 100
//   npcount rho --max 15
//   npcount compare --n 1,10,100,1000 --k 25
//   npcount wave --xmin 1 --xmax 1e12 --samples 2000
//   npcount zeros refine
//   npcount logf-check --tau 0.5,0.25,0.125
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npcount/commands.hpp"
#include "npcount/errors.hpp"

namespace {

using npcount::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic counts of Newton polygons"};
  app.require_subcommand(1);

  int bits = npcount::PrecisionContext::kDefaultBits;
  std::size_t k = 25;
  std::string format = "csv";
  std::string out_path;
  std::string zero_file = npcount::bundled_zero_file().string();

  app.add_option("--bits", bits, "working precision in bits (>= 64)")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", out_path, "write to this file instead of standard output");
  app.add_option("--zeros", zero_file, "zeta zero seed file")->capture_default_str();

  std::string range = "half-open";
  std::size_t count_max = 100;
  auto* count = app.add_subcommand("count", "exact counts N_I(n), n = 0..max");
  count->add_option("--range", range, "half-open | closed | half | symmetric")->capture_default_str();
  count->add_option("--max", count_max, "largest n (genus g for symmetric)")->required();

  std::size_t rho_max = 15;
  auto* rho = app.add_subcommand("rho", "table rho(h,d) by the recurrence");
  rho->add_option("--max", rho_max, "largest height H")->required();

  std::vector<std::uint64_t> compare_ns;
  auto* compare = app.add_subcommand("compare", "exact counts against the asymptotic estimate");
  compare->add_option("--n", compare_ns, "comma-separated n values")->delimiter(',')->required();
  compare->add_option("--k", k, "number of zeta zeros in the oscillation")->capture_default_str();

  std::string xmin_text = "1";
  std::string xmax_text = "1e12";
  std::size_t samples = 2000;
  auto* wave = app.add_subcommand("wave", "first-zero wave y(x), log-spaced samples");
  wave->add_option("--xmin", xmin_text, "smallest x (> 0)")->capture_default_str();
  wave->add_option("--xmax", xmax_text, "largest x")->capture_default_str();
  wave->add_option("--samples", samples, "number of samples")->capture_default_str();

  std::string zeros_action;
  std::size_t zeros_count = 0;
  auto* zeros = app.add_subcommand("zeros", "dump or refine the zero catalog");
  zeros->add_option("action", zeros_action, "refine | dump")->required()->check(CLI::IsMember({"refine", "dump"}));
  zeros->add_option("--count", zeros_count, "only the first N zeros (0 = all)");

  std::vector<std::string> tau_texts;
  auto* logf = app.add_subcommand("logf-check", "log f(e^-tau): direct sum against its expansion");
  logf->add_option("--tau", tau_texts, "comma-separated tau values in (0,1]")->delimiter(',')->required();
  logf->add_option("--k", k, "number of zeta zeros in the expansion")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return code(ExitCode::kUsage);
  }

  try {
    const npcount::PrecisionContext ctx(bits);
    auto parse_real = [&](const std::string& text) {
      try {
        return npcount::Real::from_string(text, ctx.bits());
      } catch (const std::invalid_argument& e) {
        throw npcount::UsageError(e.what());
      }
    };
    auto model_for = [&](std::size_t zeros_needed) {
      return npcount::AsymptoticModel(ctx, npcount::prepare_coefficients(zero_file, zeros_needed, ctx));
    };

    std::unique_ptr<npcount::Table> table;
    if (*count) {
      table = std::make_unique<npcount::Table>(npcount::count_table(npcount::parse_count_range(range), count_max));
    } else if (*rho) {
      table = std::make_unique<npcount::Table>(npcount::rho_table(rho_max));
    } else if (*compare) {
      const auto model = model_for(k);
      table = std::make_unique<npcount::Table>(npcount::compare_table(compare_ns, model, k));
    } else if (*wave) {
      const auto model = model_for(1);
      table = std::make_unique<npcount::Table>(
          npcount::wave_table(model.first_zero_wave(), parse_real(xmin_text), parse_real(xmax_text), samples));
    } else if (*zeros) {
      std::vector<npcount::ZetaZero> catalog = npcount::load_zeros(zero_file, ctx);
      if (zeros_count != 0 && zeros_count < catalog.size()) catalog.resize(zeros_count);
      table = std::make_unique<npcount::Table>(zeros_action == "dump" ? npcount::zeros_dump_table(catalog)
                                                                      : npcount::zeros_refine_table(catalog, ctx));
    } else if (*logf) {
      std::vector<npcount::Real> taus;
      for (const auto& text : tau_texts) taus.push_back(parse_real(text));
      const auto model = model_for(k);
      table = std::make_unique<npcount::Table>(npcount::logf_table(taus, model, k));
    }

    const auto output_format = format == "json" ? npcount::OutputFormat::Json : npcount::OutputFormat::Csv;
    if (out_path.empty()) {
      npcount::write_table(*table, output_format, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw npcount::IoError("cannot open output file " + out_path);
      npcount::write_table(*table, output_format, out);
      if (!out.flush()) throw npcount::IoError("failed writing " + out_path);
    }
    return code(ExitCode::kSuccess);
  } catch (const npcount::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return code(ExitCode::kUsage);
  } catch (const npcount::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return code(ExitCode::kNumeric);
  } catch (const npcount::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return code(ExitCode::kIo);
  } catch (const npcount::ParseError& e) {
    std::cerr << "I/O error: zero file " << zero_file << ", " << e.what() << '\n';
    return code(ExitCode::kIo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return code(ExitCode::kUsage);
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return code(ExitCode::kUsage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
