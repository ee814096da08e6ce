#include "ordlim/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "ordlim/checks.hpp"
#include "ordlim/counting.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/io.hpp"
#include "ordlim/matula.hpp"
#include "ordlim/mso.hpp"
#include "ordlim/recognizer.hpp"
#include "ordlim/tauberian.hpp"

namespace ordlim {

namespace {

struct Options {
  std::string config_path;
  std::string format;
  std::string segment;
  std::string set_path;
  std::string rec_path;
  std::string value;
  std::size_t n = 0;
};

Config resolve_config(const Options& opt) {
  Config config = opt.config_path.empty() ? config_from_environment() : load_config(opt.config_path);
  if (opt.format == "csv") config.format = OutputFormat::Csv;
  if (opt.format == "json") config.format = OutputFormat::Json;
  return config;
}

// --n may exceed the configured truncation.
Config for_series(Config config, std::size_t n) {
  config.truncation = std::max(config.truncation, n);
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit laws and counting for ordinals below epsilon_0 and beyond", "ordlim"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file (default: $ORDLIM_CONFIG)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* count = app.add_subcommand("count", "Counting series c(0..N) of a segment");
  count->add_option("segment", opt.segment, "Ordinal term or e0, G0, BH-OT, BH-CT")->required();
  count->add_option("--n", opt.n, "Truncation")->required();

  auto* rho = app.add_subcommand("rho", "Radius of convergence estimate");
  rho->add_option("segment", opt.segment, "Ordinal term or segment name")->required();
  rho->add_option("--n", opt.n, "Truncation")->required();

  auto* density = app.add_subcommand("density", "Exact densities D(n) and Cesaro means of a semilinear set");
  density->add_option("--set", opt.set_path, "Semilinear set JSON")->required();
  density->add_option("--n", opt.n, "Last index")->required();

  auto* limit = app.add_subcommand("limit", "Closed-form limit of a semilinear set");
  limit->add_option("--set", opt.set_path, "Semilinear set JSON")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of a recognizer as a semilinear set");
  spectrum_cmd->add_option("--rec", opt.rec_path, "Recognizer JSON")->required();
  spectrum_cmd->add_option("--segment", opt.segment, "Ambient segment")->required();

  auto* prob = app.add_subcommand("prob", "Asymptotic probability of a recognizer");
  prob->add_option("--rec", opt.rec_path, "Recognizer JSON")->required();
  prob->add_option("--segment", opt.segment, "Ambient segment")->required();
  prob->add_option("--n", opt.n, "Last index")->required();

  auto* matula = app.add_subcommand("matula", "Matula coding of ordinals below e0");
  matula->require_subcommand(1);
  matula->fallthrough();
  auto* encode = matula->add_subcommand("encode", "Ordinal term to natural number");
  encode->add_option("ordinal", opt.value, "Ordinal term")->required();
  auto* decode = matula->add_subcommand("decode", "Natural number to ordinal term");
  decode->add_option("number", opt.value, "Positive integer")->required();
  auto* census = matula->add_subcommand("census", "Rows n, #{m <= n : decode(m) < beta}, hits");
  census->add_option("segment", opt.segment, "Ordinal term or e0")->required();
  census->add_option("--n", opt.n, "Largest code")->required();
  census->add_option("--rec", opt.rec_path, "Recognizer selecting the hits");

  auto* check = app.add_subcommand("check", "Run the oracle cross-validation suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Config config = resolve_config(opt);
    const OutputFormat format = config.format;

    if (count->parsed()) {
      write_count_series(out, count_series(parse_segment(opt.segment), opt.n, for_series(config, opt.n)), format);
    } else if (rho->parsed()) {
      const Segment beta = parse_segment(opt.segment);
      write_radius(out, beta, radius_estimate(count_series(beta, opt.n, for_series(config, opt.n)), config), format);
    } else if (density->parsed()) {
      const SemilinearSet set = semilinear_set_from_json(read_json_file(opt.set_path));
      write_density_report(out, density_report(set, opt.n, for_series(config, opt.n)), format);
    } else if (limit->parsed()) {
      write_limit(out, semilinear_limit(semilinear_set_from_json(read_json_file(opt.set_path)), config), format);
    } else if (spectrum_cmd->parsed()) {
      const Recognizer rec = recognizer_from_json(read_json_file(opt.rec_path));
      write_semilinear(out, spectrum(rec, parse_segment(opt.segment), config), format);
    } else if (prob->parsed()) {
      const Recognizer rec = recognizer_from_json(read_json_file(opt.rec_path));
      write_density_report(out, asymptotic_probability(rec, parse_segment(opt.segment), opt.n, for_series(config, opt.n)),
                           format);
    } else if (encode->parsed()) {
      out << matula_encode(parse_ordinal(opt.value)) << "\n";
    } else if (decode->parsed()) {
      std::uint64_t m = 0;
      try {
        std::size_t used = 0;
        m = std::stoull(opt.value, &used);
        if (used != opt.value.size() || opt.value.front() == '-') throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        err << "usage error: '" << opt.value << "' is not a positive integer\n";
        return 1;
      }
      out << format_ordinal(matula_decode(m)) << "\n";
    } else if (census->parsed()) {
      OrdinalPredicate pred;
      if (!opt.rec_path.empty()) {
        const Recognizer rec = recognizer_from_json(read_json_file(opt.rec_path));
        pred = [rec](const Ordinal& x) { return eval_recognizer(rec, x); };
      }
      const auto rows = matula_census(parse_segment(opt.segment), opt.n, pred, config);
      if (format == OutputFormat::Json) {
        Json doc = Json::array();
        for (const auto& row : rows) doc.push_back({row.total, row.hits});
        out << Json{{"segment", format_segment(parse_segment(opt.segment))}, {"rows", doc}}.dump(2) << "\n";
      } else {
        out << "n,total,hits\n";
        for (std::size_t k = 0; k < rows.size(); ++k) out << k << "," << rows[k].total << "," << rows[k].hits << "\n";
      }
    } else if (check->parsed()) {
      const auto results = run_checks(config);
      write_checks(out, results, format);
      for (const auto& r : results)
        if (!r.passed) return 2;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ordlim
