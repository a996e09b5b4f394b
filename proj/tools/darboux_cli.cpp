// Command-line front end: ingest a measure spec, run any pipeline stage,
// emit JSON or CSV. Exit codes: 0 success, 1 domain error (module error name
// on stderr) or failed verification, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "darboux/cfrac.hpp"
#include "darboux/darboux.hpp"
#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/json_io.hpp"
#include "darboux/moments.hpp"
#include "darboux/verify.hpp"

namespace {

using darboux::json;

struct CommonOptions {
  std::string spec_inline;
  std::string spec_file;
  int depth = 0;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--spec", opt.spec_inline, "Inline measure spec (JSON)");
  cmd->add_option("--spec-file", opt.spec_file, "Path to a measure spec (JSON)");
  cmd->add_option("--depth", opt.depth, "Pipeline depth n: ingests moments to index 4n-1")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out_path, "Write output to a file instead of stdout");
}

int max_depth() {
  if (const char* env = std::getenv("DARBOUX_MAX_DEPTH")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw CLI::ValidationError("DARBOUX_MAX_DEPTH", "not an integer");
    }
  }
  return 64;
}

darboux::MeasureSpec load_spec(const CommonOptions& opt) {
  if (opt.spec_inline.empty() == opt.spec_file.empty())
    throw CLI::ValidationError("--spec", "exactly one of --spec / --spec-file is required");
  std::string text = opt.spec_inline;
  if (!opt.spec_file.empty()) {
    std::ifstream in(opt.spec_file);
    if (!in) throw CLI::ValidationError("--spec-file", "cannot read " + opt.spec_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError("--spec", std::string("invalid JSON: ") + e.what());
  }
  return darboux::measure_spec_from_json(parsed);
}

// RFC 4180: quote any field containing a comma, quote or line break.
std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char ch : raw) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_field(row[i]);
    }
    os << "\r\n";
  }
  return os.str();
}

std::string join_poly(const darboux::RationalPoly& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << p.coeffs()[i];
  }
  return os.str();
}

void emit(const CommonOptions& opt, const json& body,
          const std::vector<std::vector<std::string>>& csv_rows) {
  std::string text = opt.format == "csv" ? csv_table(csv_rows) : body.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw darboux::ParseFailure("cannot write " + opt.out_path);
  out << text;
}

int run_moments(const CommonOptions& opt) {
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  json body{{"type", "moments"}, {"values", darboux::to_json(s)}};
  std::vector<std::vector<std::string>> rows{{"index", "value"}};
  for (std::size_t i = 0; i < s.size(); ++i) rows.push_back({std::to_string(i), s[i].str()});
  emit(opt, body, rows);
  return 0;
}

int run_jacobi(const CommonOptions& opt) {
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  const darboux::MonicJacobi J = darboux::jacobi_from_moments(s, opt.depth);
  std::vector<std::vector<std::string>> rows{{"index", "b", "c"}};
  for (std::size_t j = 0; j < J.b.size(); ++j)
    rows.push_back({std::to_string(j), J.b[j].str(), j < J.c.size() ? J.c[j].str() : ""});
  emit(opt, darboux::to_json(J), rows);
  return 0;
}

int run_unwrap(const CommonOptions& opt) {
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  const darboux::MonicJacobi J = darboux::jacobi_from_moments(s, opt.depth);
  const darboux::DarbouxResult E = darboux::extended_darboux(J);
  std::vector<std::vector<std::string>> rows{{"index", "diag", "chain", "poly"}};
  for (std::size_t k = 0; k < E.matrix.b.size(); ++k)
    rows.push_back({std::to_string(k), E.matrix.b[k].str(),
                    k < E.matrix.c.size() ? E.matrix.c[k].str() : "",
                    k < E.polys.size() ? join_poly(E.polys[k]) : ""});
  emit(opt, darboux::to_json(E), rows);
  return 0;
}

int run_darboux(const CommonOptions& opt, const std::string& shift_text) {
  const darboux::Shift shift = darboux::shift_from_string(shift_text);
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  const darboux::MonicJacobi J = darboux::jacobi_from_moments(s, opt.depth);
  const darboux::LUFactors f = darboux::lu(J, shift);
  const darboux::MonicJacobi UL = darboux::ul(f);
  json body = darboux::to_json(f);
  body["ul"] = darboux::to_json(UL);
  std::vector<std::vector<std::string>> rows{{"index", "u", "l", "ul_b", "ul_c"}};
  for (std::size_t j = 0; j < f.u.size(); ++j)
    rows.push_back({std::to_string(j), f.u[j].str(), j >= 1 && j - 1 < f.l.size() ? f.l[j - 1].str() : "",
                    UL.b[j].str(), j < UL.c.size() ? UL.c[j].str() : ""});
  emit(opt, body, rows);
  return 0;
}

int run_chihara(const CommonOptions& opt, const std::string& alpha_text) {
  const darboux::Shift shift = darboux::shift_from_string(alpha_text);
  if (shift.kind == darboux::Shift::Kind::none)
    throw CLI::ValidationError("--alpha", "a nonzero shift is required");
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  const darboux::MonicJacobi J = darboux::jacobi_from_moments(s, opt.depth);
  if (shift.kind == darboux::Shift::Kind::real) {
    const darboux::DarbouxResult C = darboux::chihara(J, shift.alpha);
    std::vector<std::vector<std::string>> rows{{"index", "diag", "chain", "poly"}};
    for (std::size_t k = 0; k < C.matrix.b.size(); ++k)
      rows.push_back({std::to_string(k), C.matrix.b[k].str(),
                      k < C.matrix.c.size() ? C.matrix.c[k].str() : "",
                      k < C.polys.size() ? join_poly(C.polys[k]) : ""});
    emit(opt, darboux::to_json(C), rows);
    return 0;
  }
  const darboux::ComplexDarbouxResult C = darboux::chihara_imaginary(J, shift.alpha);
  std::vector<std::vector<std::string>> rows{{"index", "diag", "chain"}};
  for (std::size_t k = 0; k < C.diag.size(); ++k)
    rows.push_back({std::to_string(k), C.diag[k].str(),
                    k < C.chain.size() ? C.chain[k].str() : ""});
  emit(opt, darboux::to_json(C), rows);
  return 0;
}

int run_cfrac(const CommonOptions& opt, const std::string& kind) {
  const darboux::MomentSequence s = darboux::measure_moments(load_spec(opt), 4 * opt.depth);
  darboux::ContinuedFraction cf;
  darboux::MomentSequence match_target = s;
  if (kind == "j") {
    cf = darboux::jfraction(s);
  } else if (kind == "s") {
    cf = darboux::sfraction(s);
  } else {
    cf = darboux::pfraction(s);
    match_target = darboux::unwrap_moments(s);
  }
  json body = darboux::to_json(cf);
  json approximants = json::array();
  std::vector<std::vector<std::string>> rows{
      {"level", "b", "c", "d", "num", "den", "laurent_match"}};
  const int levels = std::min(cf.levels(), opt.depth);
  for (int k = 1; k <= levels; ++k) {
    const darboux::RationalApproximant a = darboux::approximant(cf, k);
    const int m = darboux::laurent_match(a, match_target);
    approximants.push_back(json{{"k", k},
                                {"num", darboux::to_json(a.num)},
                                {"den", darboux::to_json(a.den)},
                                {"laurent_match", m}});
    const std::size_t i = static_cast<std::size_t>(k) - 1;
    rows.push_back({std::to_string(k),
                    i < cf.b.size() ? cf.b[i].str() : "",
                    i < cf.c.size() ? cf.c[i].str() : "",
                    i < cf.d.size() ? cf.d[i].str() : "",
                    join_poly(a.num), join_poly(a.den), std::to_string(m)});
  }
  body["approximants"] = std::move(approximants);
  emit(opt, body, rows);
  return 0;
}

int run_verify(const CommonOptions& opt, const std::string& shift_text) {
  std::optional<darboux::Shift> shift;
  if (!shift_text.empty()) {
    darboux::Shift parsed = darboux::shift_from_string(shift_text);
    if (parsed.kind != darboux::Shift::Kind::none) shift = parsed;
  }
  const darboux::VerificationReport report =
      darboux::verify_all(load_spec(opt), opt.depth, shift);
  std::vector<std::vector<std::string>> rows{{"name", "status", "witness"}};
  for (const darboux::CheckResult& c : report.checks)
    rows.push_back({c.name, darboux::status_name(c.status), c.witness});
  emit(opt, darboux::to_json(report), rows);
  if (!report.all_passed()) {
    std::cerr << "verification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orthogonal-polynomial pipeline: moments, Jacobi matrices, "
               "Darboux transformations, continued fractions"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string shift_text;
  std::string alpha_text;
  std::string kind = "j";

  CLI::App* c_moments = app.add_subcommand("moments", "Print the ingested moment prefix");
  add_common(c_moments, opt);
  CLI::App* c_jacobi = app.add_subcommand("jacobi", "Recurrence coefficients (b, c)");
  add_common(c_jacobi, opt);
  CLI::App* c_unwrap =
      app.add_subcommand("unwrap", "Extended Darboux transformation of the Jacobi matrix");
  add_common(c_unwrap, opt);
  CLI::App* c_darboux = app.add_subcommand("darboux", "LU factors and the UL matrix");
  add_common(c_darboux, opt);
  c_darboux->add_option("--shift", shift_text, "Shift: p/q or i:p/q (default none)");
  CLI::App* c_chihara = app.add_subcommand("chihara", "Shifted Darboux (Chihara) matrix");
  add_common(c_chihara, opt);
  c_chihara->add_option("--alpha", alpha_text, "Shift parameter: p/q or i:p/q")->required();
  CLI::App* c_cfrac = app.add_subcommand("cfrac", "Continued-fraction coefficients");
  add_common(c_cfrac, opt);
  c_cfrac->add_option("--kind", kind, "Fraction kind")->check(CLI::IsMember({"j", "s", "p"}));
  CLI::App* c_verify = app.add_subcommand("verify", "Run every identity check");
  add_common(c_verify, opt);
  c_verify->add_option("--shift", shift_text, "Optional shift for the Chihara suite");

  try {
    app.parse(argc, argv);
    if (opt.depth > max_depth())
      throw CLI::ValidationError("--depth", "exceeds DARBOUX_MAX_DEPTH cap of " +
                                                std::to_string(max_depth()));
    if (c_moments->parsed()) return run_moments(opt);
    if (c_jacobi->parsed()) return run_jacobi(opt);
    if (c_unwrap->parsed()) return run_unwrap(opt);
    if (c_darboux->parsed()) return run_darboux(opt, shift_text);
    if (c_chihara->parsed()) return run_chihara(opt, alpha_text);
    if (c_cfrac->parsed()) return run_cfrac(opt, kind);
    if (c_verify->parsed()) return run_verify(opt, shift_text);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const darboux::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
