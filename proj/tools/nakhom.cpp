// nakhom -- command-line homological calculator for Nakayama algebras.
//
// Every subcommand prints one JSON report (stable key order; the elapsed
// time is the only field that varies between identical runs).  Exit codes:
// 0 success / all checks hold, 1 a counterexample was found, 2 invalid
// input or usage.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nakhom/homext.hpp"
#include "nakhom/kupisch.hpp"
#include "nakhom/modrep.hpp"
#include "nakhom/oracle.hpp"
#include "nakhom/serialize.hpp"
#include "nakhom/theorems.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nakhom::json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void print_report(const std::string& command, const std::string& algebra,
                  json inputs, json outputs, const Timer& timer) {
  json report{{"command", command},
              {"algebra", algebra},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"version", kVersion},
              {"elapsed_ms", timer.elapsed_ms()}};
  std::cout << report.dump(2) << "\n";
}

struct SeriesArg {
  std::string series;
  std::string kind = "cyclic";
  bool kind_explicit = false;

  void attach(CLI::App* cmd, bool required = true) {
    auto* s = cmd->add_option("--series", series,
                              "Kupisch series, e.g. 'cyclic:2,3' or '2,3'");
    if (required) s->required();
    cmd->add_option("--kind", kind, "series kind when --series has no prefix")
        ->check(CLI::IsMember({"cyclic", "linear"}))
        ->each([this](const std::string&) { kind_explicit = true; });
  }

  nakhom::KupischSeries parse() const {
    const bool has_prefix = series.find(':') != std::string::npos;
    if (has_prefix && kind_explicit) {
      const std::string prefix = series.substr(0, series.find(':'));
      if (prefix != kind)
        throw nakhom::invalid_series("--kind " + kind +
                                     " contradicts series prefix '" + prefix + "'");
    }
    return nakhom::parse_series(
        series, kind == "linear" ? nakhom::Kind::linear : nakhom::Kind::cyclic);
  }
};

int parse_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return -1;
  }
  return (lo >= 1 && hi >= lo) ? 0 : -1;
}

json module_report(const nakhom::KupischSeries& A, const nakhom::Indecomposable& M) {
  const auto s = nakhom::syzygy(A, M);
  const auto orbit = nakhom::syzygy_orbit(A, M);
  json states = json::array();
  for (const auto& st : orbit.states) states.push_back(nakhom::to_string(st));
  const json terminal =
      orbit.projective_at
          ? json{{"projective_reached", *orbit.projective_at}}
          : json{{"rho", orbit.preperiod}, {"pi", orbit.period}};
  return json{{"module", nakhom::to_string(M)},
              {"dimension_vector", nakhom::dimension_vector(A, M)},
              {"top", nakhom::top_vertex(A, M)},
              {"socle", nakhom::socle_vertex(A, M)},
              {"projective", nakhom::is_projective(A, M)},
              {"injective", nakhom::is_injective(A, M)},
              {"syzygy", s ? json(nakhom::to_string(*s)) : json(nullptr)},
              {"pd", nakhom::json_dim(nakhom::projective_dimension(A, M))},
              {"injdim", nakhom::json_dim(nakhom::injective_dimension(A, M))},
              {"orbit", json{{"states", std::move(states)}, {"terminal", terminal}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological calculator for Nakayama algebras given by Kupisch series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check a Kupisch series");
  SeriesArg validate_arg;
  validate_arg.attach(cmd_validate);

  // module
  auto* cmd_module = app.add_subcommand("module", "invariants of one module");
  SeriesArg module_arg;
  module_arg.attach(cmd_module);
  std::string module_m;
  cmd_module->add_option("--m", module_m, "module as 'i,k'")->required();

  // hom
  auto* cmd_hom = app.add_subcommand("hom", "dim Hom(N, M)");
  SeriesArg hom_arg;
  hom_arg.attach(cmd_hom);
  std::string hom_from, hom_to;
  bool hom_oracle = false;
  cmd_hom->add_option("--from", hom_from, "source module 'i,k'")->required();
  cmd_hom->add_option("--to", hom_to, "target module 'i,k'")->required();
  cmd_hom->add_flag("--oracle", hom_oracle, "cross-check with the matrix oracle");

  // ext
  auto* cmd_ext = app.add_subcommand("ext", "Ext profile of a pair");
  SeriesArg ext_arg;
  ext_arg.attach(cmd_ext);
  std::string ext_from, ext_to;
  int ext_max_degree = 0;
  bool ext_oracle = false;
  cmd_ext->add_option("--from", ext_from)->required();
  cmd_ext->add_option("--to", ext_to)->required();
  cmd_ext->add_option("--max-degree", ext_max_degree, "highest Ext degree")
      ->required()
      ->check(CLI::Range(1, 100000));
  cmd_ext->add_flag("--oracle", ext_oracle, "cross-check with the matrix oracle");

  // selfext
  auto* cmd_selfext = app.add_subcommand("selfext", "selfextension certificate");
  SeriesArg selfext_arg;
  selfext_arg.attach(cmd_selfext);
  std::string selfext_m;
  cmd_selfext->add_option("--m", selfext_m)->required();

  // gldim
  auto* cmd_gldim = app.add_subcommand("gldim", "global dimension");
  SeriesArg gldim_arg;
  gldim_arg.attach(cmd_gldim);

  // gorenstein
  auto* cmd_gor = app.add_subcommand("gorenstein", "Gorenstein classification");
  SeriesArg gor_arg;
  gor_arg.attach(cmd_gor);

  // survey
  auto* cmd_survey = app.add_subcommand("survey", "sweep checks over enumerated algebras");
  std::string survey_kind = "cyclic";
  std::string survey_n = "1..3";
  int survey_loewy = 8;
  std::string survey_checks = "all";
  bool survey_dedupe = false;
  int survey_jobs = 1;
  int survey_horizon = 50;
  std::string survey_out;
  std::string survey_format = "jsonl";
  long survey_resume = 0;
  cmd_survey->add_option("--kind", survey_kind)
      ->check(CLI::IsMember({"cyclic", "linear"}));
  cmd_survey->add_option("--n", survey_n, "vertex count or range, e.g. 1..4");
  cmd_survey->add_option("--max-loewy", survey_loewy)->check(CLI::Range(2, 64));
  cmd_survey->add_option("--checks", survey_checks, "'all' or comma-separated ids");
  cmd_survey->add_flag("--dedupe", survey_dedupe, "one representative per rotation class");
  cmd_survey->add_option("--jobs", survey_jobs)->check(CLI::Range(1, 256));
  cmd_survey->add_option("--horizon", survey_horizon)->check(CLI::Range(1, 10000));
  cmd_survey->add_option("--out", survey_out,
                         "report file (JSON lines); default stdout; relative "
                         "paths resolve under $NAKHOM_OUT_DIR when set");
  cmd_survey->add_option("--format", survey_format)
      ->check(CLI::IsMember({"jsonl", "tsv"}));
  cmd_survey->add_option("--resume-from", survey_resume,
                         "skip this many verdict lines and append")
      ->check(CLI::NonNegativeNumber);

  // paper
  auto* cmd_paper = app.add_subcommand("paper", "reproduce worked examples");
  std::string paper_example;
  int paper_n = 0;
  cmd_paper->add_option("--example", paper_example, "one of 1.5, 1.6, 2.2")
      ->required()
      ->check(CLI::IsMember({"1.5", "1.6", "2.2"}));
  cmd_paper->add_option("--n", paper_n, "vertex count (default: sweep 2..8)")
      ->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    Timer timer;
    if (*cmd_validate) {
      const auto A = validate_arg.parse();
      print_report("validate", nakhom::to_string(A),
                   json{{"series", validate_arg.series}},
                   json{{"valid", true},
                        {"n", A.n()},
                        {"loewy_length", nakhom::loewy_length(A)},
                        {"selfinjective", nakhom::is_selfinjective(A)},
                        {"opposite", nakhom::to_string(nakhom::opposite(A))}},
                   timer);
      return 0;
    }

    if (*cmd_module) {
      const auto A = module_arg.parse();
      const auto M = nakhom::parse_module(A, module_m);
      print_report("module", nakhom::to_string(A), json{{"m", module_m}},
                   module_report(A, M), timer);
      return 0;
    }

    if (*cmd_hom) {
      const auto A = hom_arg.parse();
      const auto N = nakhom::parse_module(A, hom_from);
      const auto M = nakhom::parse_module(A, hom_to);
      const int dim = nakhom::hom_dim(A, N, M);
      json out{{"dim", dim}};
      if (hom_oracle) {
        const int oracle = nakhom::hom_dim_oracle(A, N, M);
        out["oracle_dim"] = oracle;
        out["agree"] = oracle == dim;
      }
      print_report("hom", nakhom::to_string(A),
                   json{{"from", hom_from}, {"to", hom_to}}, std::move(out), timer);
      return 0;
    }

    if (*cmd_ext) {
      const auto A = ext_arg.parse();
      const auto N = nakhom::parse_module(A, ext_from);
      const auto M = nakhom::parse_module(A, ext_to);
      const auto profile = nakhom::ext_dims(A, N, M, ext_max_degree);
      json out = profile;
      if (!nakhom::is_projective(A, N) && N.length >= M.length)
        out["ext1_via_lemma"] = nakhom::ext1_via_lemma(A, N, M);
      if (ext_oracle) {
        std::vector<int> oracle_dims;
        for (int l = 0; l <= ext_max_degree; ++l)
          oracle_dims.push_back(nakhom::ext_dim_oracle(A, N, M, l));
        out["oracle_dims"] = oracle_dims;
        out["agree"] = oracle_dims == profile.dims;
      }
      print_report("ext", nakhom::to_string(A),
                   json{{"from", ext_from},
                        {"to", ext_to},
                        {"max_degree", ext_max_degree}},
                   std::move(out), timer);
      return 0;
    }

    if (*cmd_selfext) {
      const auto A = selfext_arg.parse();
      const auto M = nakhom::parse_module(A, selfext_m);
      const auto cert = nakhom::has_infinitely_many_selfext(A, M);
      print_report("selfext", nakhom::to_string(A), json{{"m", selfext_m}},
                   json{{"module", nakhom::to_string(M)},
                        {"is_rigid", nakhom::is_rigid(A, M)},
                        {"criterion_nonrigid", nakhom::nonrigidity_criterion(A, M)},
                        {"ext1_dim", nakhom::ext_dims(A, M, M, 1).dims[1]},
                        {"certificate", cert}},
                   timer);
      return 0;
    }

    if (*cmd_gldim) {
      const auto A = gldim_arg.parse();
      print_report("gldim", nakhom::to_string(A), json::object(),
                   json{{"gldim", nakhom::json_dim(nakhom::global_dimension(A))},
                        {"n", A.n()},
                        {"loewy_length", nakhom::loewy_length(A)},
                        {"loewy_bound", 2 * A.n() - 1}},
                   timer);
      return 0;
    }

    if (*cmd_gor) {
      const auto A = gor_arg.parse();
      print_report("gorenstein", nakhom::to_string(A), json::object(),
                   json(nakhom::gorenstein(A)), timer);
      return 0;
    }

    if (*cmd_survey) {
      nakhom::SurveyOptions opts;
      opts.kind = survey_kind == "linear" ? nakhom::Kind::linear : nakhom::Kind::cyclic;
      if (parse_range(survey_n, opts.n_min, opts.n_max) != 0) {
        std::cerr << "bad --n range '" << survey_n << "'\n";
        return 2;
      }
      opts.max_loewy = survey_loewy;
      opts.dedupe = survey_dedupe;
      opts.jobs = survey_jobs;
      opts.horizon = survey_horizon;
      if (survey_checks != "all") {
        std::string rest = survey_checks;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          opts.checks.push_back(rest.substr(0, comma));
          if (comma == std::string::npos) break;
          rest = rest.substr(comma + 1);
        }
      }

      std::ofstream file;
      std::ostream* sink_stream = &std::cout;
      if (!survey_out.empty()) {
        std::filesystem::path path(survey_out);
        if (path.is_relative())
          if (const char* dir = std::getenv("NAKHOM_OUT_DIR"))
            path = std::filesystem::path(dir) / path;
        file.open(path, survey_resume > 0 ? std::ios::app : std::ios::out);
        if (!file) {
          std::cerr << "cannot open '" << path.string() << "' for writing\n";
          return 2;
        }
        sink_stream = &file;
      }

      long line = 0;
      const bool tsv = survey_format == "tsv";
      if (tsv && survey_resume == 0)
        *sink_stream << "check\talgebra\tstatus\treason\twitness\n";
      const auto summary = nakhom::survey(opts, [&](const nakhom::Verdict& v) {
        if (line++ < survey_resume) return;
        if (tsv) {
          *sink_stream << v.check << '\t' << nakhom::to_string(v.algebra) << '\t'
                       << to_cstring(v.status) << '\t' << v.reason << '\t'
                       << (v.witness.is_null() ? "" : v.witness.dump()) << "\n";
        } else {
          *sink_stream << json(v).dump() << "\n";
        }
      });
      json summary_json{{"summary", summary}, {"elapsed_ms", timer.elapsed_ms()}};
      *sink_stream << (tsv ? "# " : "") << summary_json.dump() << "\n";
      return summary.counterexamples > 0 ? 1 : 0;
    }

    if (*cmd_paper) {
      std::vector<nakhom::Verdict> verdicts;
      if (paper_example == "2.2") {
        verdicts.push_back(nakhom::reproduce_example_kx3());
      } else {
        if (paper_n > 0) {
          verdicts.push_back(nakhom::reproduce_example_223(paper_n));
        } else {
          for (int n = 2; n <= 8; ++n)
            verdicts.push_back(nakhom::reproduce_example_223(n));
        }
      }
      json out = json::array();
      bool failed = false;
      for (const auto& v : verdicts) {
        out.push_back(v);
        failed = failed || v.status == nakhom::Status::counterexample;
      }
      const std::string algebra = verdicts.size() == 1
                                      ? nakhom::to_string(verdicts.front().algebra)
                                      : "cyclic:2,...,2,3 (n=2..8)";
      print_report("paper", algebra,
                   json{{"example", paper_example},
                        {"n", paper_n > 0 ? json(paper_n) : json(nullptr)}},
                   json{{"verdicts", std::move(out)}}, timer);
      return failed ? 1 : 0;
    }
  } catch (const nakhom::invalid_series& e) {
    std::cerr << "invalid series: " << e.what() << "\n";
    return 2;
  } catch (const nakhom::hypothesis_violated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
