// Copyright 2026 The mubgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mubgeo/dapg.hpp"
#include "mubgeo/entangled.hpp"
#include "mubgeo/error.hpp"
#include "mubgeo/mean_king.hpp"
#include "mubgeo/serialize.hpp"
#include "mubgeo/verify.hpp"

namespace mubgeo::cli {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError, "cannot read " + what + " from '" + std::string(text) + "'");
  }
  return value;
}

std::pair<std::string, std::string> split_pair(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, what + " must look like 'a,b', got '" + text + "'");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

PointCoord parse_point(const std::string& text, PrimeDim dim) {
  const auto [m, b] = split_pair(text, "point");
  return {FieldElem(dim, parse_int(m, "point row")), BasisLabel::parse(b, dim)};
}

LineCoord parse_line(const std::string& text, PrimeDim dim) {
  const auto [m_cb, m0] = split_pair(text, "line");
  return {FieldElem(dim, parse_int(m_cb, "line m_cb")), FieldElem(dim, parse_int(m0, "line m0"))};
}

int resolve_max_d(const std::optional<int>& flag, const std::optional<std::string>& env) {
  if (flag) return *flag;
  if (env && !env->empty()) {
    const auto v = parse_int(*env, "MUBGEO_MAX_D");
    if (v < 3 || v > 100000) throw Error(ErrorCode::InvalidDim, "MUBGEO_MAX_D out of range: " + *env);
    return static_cast<int>(v);
  }
  return kDefaultMaxDim;
}

PrimeDim resolve_dim(int d, int max_d) {
  try {
    return make_dim(d, max_d);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidDim, e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidDim:
    case ErrorCode::NotPrime:
    case ErrorCode::IsTwo:
    case ErrorCode::TooSmall:
    case ErrorCode::ExceedsCap:
    case ErrorCode::IoError:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_max_d) {
  CLI::App app{"Mutually unbiased bases, their dual affine plane and the Mean King protocol", "mubgeo"};
  app.require_subcommand(1);

  std::optional<int> max_d_flag;
  app.add_option("--max-d", max_d_flag, "Largest accepted dimension (overrides MUBGEO_MAX_D)");

  int d = 3;
  std::string format = "json";
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Write a table: mub, geometry, basis, lineops or overlap");
  std::string kind;
  gen->add_option("kind", kind, "What to generate")
      ->required()
      ->check(CLI::IsMember({"mub", "geometry", "basis", "lineops", "overlap"}));
  gen->add_option("--d", d, "Prime dimension")->required();
  gen->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  std::uint64_t trials = 100000;
  std::string fixture_path;
  verify->add_option("--d", d, "Prime dimension");
  verify->add_option("--suite", suite, "mub, geometry, lineops, entangled, collective, mkp or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--tolerance", tolerance, "Override every float tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Monte-Carlo seed");
  verify->add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
  verify->add_option("--fixture", fixture_path, "Geometry JSON to check instead of the built incidence table");
  verify->add_option("--out", out_path, "Report file (default stdout)");

  auto* overlap = app.add_subcommand("overlap", "Amplitude <A_point|P_line> and incidence");
  std::string point_text;
  std::string line_text;
  overlap->add_option("--d", d, "Prime dimension")->required();
  overlap->add_option("--point", point_text, "Point 'm,b' with b in CB or 0..d-1")->required();
  overlap->add_option("--line", line_text, "Line 'mcb,m0'")->required();
  overlap->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  format = "text";

  auto* mkp = app.add_subcommand("mkp", "Mean King protocol: enumerate or run");
  std::string mode;
  std::string j_text;
  std::string king_text;
  mkp->add_option("mode", mode, "enumerate or run")->required()->check(CLI::IsMember({"enumerate", "run"}));
  mkp->add_option("--d", d, "Prime dimension")->required();
  mkp->add_option("--j", j_text, "Prepared line 'mcb,m0'")->required();
  mkp->add_option("--king-basis", king_text, "King's basis: CB or 0..d-1");
  mkp->add_option("--trials", trials, "Monte-Carlo trials (run mode)")->check(CLI::PositiveNumber);
  mkp->add_option("--seed", seed, "Monte-Carlo seed (run mode)");
  mkp->add_option("--out", out_path, "Report file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const int max_d = resolve_max_d(max_d_flag, env_max_d);

    if (gen->parsed()) {
      if (gen->count("--format") == 0) format = "json";
      const PrimeDim dim = resolve_dim(d, max_d);
      if (format == "csv" && kind != "geometry" && kind != "overlap") {
        throw Error(ErrorCode::ParseError, "csv output is available for geometry and overlap only");
      }
      std::string text;
      if (kind == "mub") {
        text = dump(io::mub_table_json(dim));
      } else if (kind == "geometry") {
        const IncidenceStructure inc = build_incidence(dim);
        text = format == "csv" ? io::geometry_csv(inc) : dump(io::geometry_json(inc));
      } else if (kind == "basis") {
        text = dump(io::line_basis_json(dim));
      } else if (kind == "lineops") {
        text = dump(io::line_operators_json(dim));
      } else {
        if (format != "csv") throw Error(ErrorCode::ParseError, "overlap tables are written as csv");
        text = io::overlap_csv(dim);
      }
      emit(text, out_path, out);
      return kExitPass;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.tolerance = tolerance;
      options.seed = seed;
      options.trials = trials;
      PrimeDim dim = resolve_dim(d, max_d);
      if (!fixture_path.empty()) {
        std::ifstream file(fixture_path);
        if (!file) throw Error(ErrorCode::IoError, "cannot open fixture '" + fixture_path + "'");
        io::Json j;
        try {
          j = io::Json::parse(file);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::ParseError, std::string("fixture is not JSON: ") + e.what());
        }
        options.fixture = io::incidence_from_json(j, max_d);
        dim = options.fixture->dim();
      }
      const VerifyReport report = run_suite(dim, suite, options);
      emit(dump(report.to_json()), out_path, out);
      for (const auto& c : report.checks) {
        if (!c.pass) err << "FAIL " << c.id << ": " << c.counterexample << "\n";
      }
      return report.pass() ? kExitPass : kExitFailure;
    }

    if (overlap->parsed()) {
      if (overlap->count("--format") == 0) format = "text";
      const PrimeDim dim = resolve_dim(d, max_d);
      const PointCoord point = parse_point(point_text, dim);
      const LineCoord line = parse_line(line_text, dim);
      const Complex amp = overlap_point_line(point, line);
      const bool on = incident(point, line);
      if (format == "json") {
        emit(dump(io::Json{{"d", dim.value()},
                           {"point", point.to_string()},
                           {"line", line.to_string()},
                           {"amplitude", io::complex_json(amp)},
                           {"magnitude", std::abs(amp)},
                           {"incident", on}}),
             "", out);
      } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "amplitude %.10f%+.10fi\nmagnitude %.4f\n", amp.real() + 0.0,
                      amp.imag() + 0.0, std::abs(amp));
        out << "point " << point.to_string() << " line " << line.to_string() << "\n"
            << buf << (on ? "on-line" : "off-line") << "\n";
      }
      return kExitPass;
    }

    // mkp
    const PrimeDim dim = resolve_dim(d, max_d);
    const LineCoord j = parse_line(j_text, dim);
    std::optional<BasisLabel> king;
    if (!king_text.empty()) king = BasisLabel::parse(king_text, dim);
    if (mode == "enumerate") {
      const ProtocolTable table = enumerate_protocol(dim, j, king);
      emit(dump(io::mkp_report_json(table, king, std::nullopt)), out_path, out);
      return table.mismatches() == 0 && table.delta_violations() == 0 ? kExitPass : kExitFailure;
    }
    if (!king) throw Error(ErrorCode::ParseError, "mkp run needs --king-basis");
    if (mkp->count("--trials") == 0 || mkp->count("--seed") == 0) {
      throw Error(ErrorCode::ParseError, "mkp run needs --trials and --seed");
    }
    const ProtocolTable table = enumerate_protocol(dim, j, king);
    const TrialStats stats = simulate(dim, j, *king, trials, seed);
    emit(dump(io::mkp_report_json(table, king, stats, seed)), out_path, out);
    return stats.mismatch == 0 ? kExitPass : kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace mubgeo::cli
