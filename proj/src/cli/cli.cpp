#include "cpvi/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cpvi/charts/charts.hpp"
#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"
#include "cpvi/numlab/numlab.hpp"
#include "cpvi/reduction/reduction.hpp"
#include "cpvi/suites.hpp"
#include "json.hpp"

namespace cpvi {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<BigRational> parse_list(const std::string& s, std::size_t n, const char* what) {
  auto parts = split(s);
  if (parts.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  std::vector<BigRational> out;
  for (const auto& p : parts) {
    try {
      out.push_back(parse_rational(p));
    } catch (const ParseError& e) {
      throw UsageError(std::string(what) + ": " + e.what());
    }
  }
  return out;
}

// Initial values and times are floating point anyway, so decimals are allowed.
std::vector<double> parse_reals(const std::string& s, std::size_t n, const char* what) {
  auto parts = split(s);
  if (parts.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  std::vector<double> out;
  for (const auto& p : parts) {
    try {
      out.push_back(parse_rational(p).get_d());
      continue;
    } catch (const ParseError&) {
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(p, &used);
    } catch (const std::exception&) {
    }
    if (used == 0 || used != p.size() || !std::isfinite(v)) throw UsageError(std::string(what) + ": not a number: '" + p + "'");
    out.push_back(v);
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["method"] = std::string(to_string(r.method));
  j["status"] = std::string(to_string(r.status));
  j["detail"] = r.detail;
  j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
  if (!r.parts.empty()) {
    json parts = json::array();
    for (auto s : r.parts) parts.push_back(std::string(to_string(s)));
    j["parts"] = parts;
  }
  return j;
}

int report(const std::string& suite, const std::vector<VerificationReport>& reports, bool as_json, std::ostream& out) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) ++counts[static_cast<int>(r.status)];
  bool ok = counts[static_cast<int>(Status::fail)] == 0;
  if (as_json) {
    json j;
    j["suite"] = suite;
    j["checks"] = json::array();
    for (const auto& r : reports) j["checks"].push_back(to_json(r));
    j["summary"] = {{"total", reports.size()},
                    {"pass", counts[0]},
                    {"pass-mod-relation", counts[1]},
                    {"fail", counts[2]},
                    {"skipped", counts[3]}};
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << "[" << to_string(r.status) << "] " << r.check_id << " (" << to_string(r.method) << ", " << std::fixed
          << std::setprecision(1) << r.elapsed_ms << " ms): " << r.detail << "\n";
    }
    out << suite << ": " << reports.size() << " checks, " << counts[0] << " pass, " << counts[1]
        << " pass-mod-relation, " << counts[2] << " fail\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int dump_hamiltonian(bool as_json, std::ostream& out) {
  std::string text = to_string(coupled_polynomial());
  if (as_json)
    out << json{{"object", "t(1-t)H"}, {"text", text}}.dump(2) << "\n";
  else
    out << text << "\n";
  return kExitOk;
}

int dump_chart(int j, bool as_json, std::ostream& out) {
  if (j < 0 || j > 4) throw UsageError("chart index must be in 0..4");
  TransformedHamiltonian th = transformed_hamiltonian(j);
  std::string text = to_string(th.poly);
  if (as_json)
    out << json{{"object", "r" + std::to_string(j) + (j == 2 ? "(K+x)" : "(K)")},
                {"needs_relation", th.needs_relation},
                {"phase_degree", th.phase_degree},
                {"text", text}}
                   .dump(2)
        << "\n";
  else
    out << text << "\n";
  return kExitOk;
}

int dump_pipeline_cmd(const std::string& name, bool as_json, std::ostream& out) {
  ReductionPipeline p;
  if (name == "k1")
    p = k1_definition();
  else if (name == "k2")
    p = k2_definition();
  else
    throw UsageError("pipeline must be k1 or k2");
  if (!as_json) {
    out << dump_pipeline(p);
    return kExitOk;
  }
  json stages = json::array();
  for (const auto& s : pipeline_stages(p))
    stages.push_back({{"label", s.label},
                      {"q", to_string(s.q)},
                      {"p", to_string(s.p)},
                      {"dq", to_string(s.dq)},
                      {"dp", to_string(s.dp)}});
  json beta = json::array();
  for (const auto& b : p.target_beta) beta.push_back(to_string(b));
  out << json{{"pipeline", p.name},
              {"source", to_string(p.source.value)},
              {"stages", stages},
              {"target_scale", to_string(p.target_scale)},
              {"target_time", to_string(p.target_time)},
              {"target_beta", beta}}
             .dump(2)
      << "\n";
  return kExitOk;
}

struct IntegrateArgs {
  std::string alpha, init, span;
  double rtol = 1e-10;
  std::string csv, plot;
};

int integrate_cmd(const IntegrateArgs& a, bool as_json, std::ostream& out) {
  auto al = parse_list(a.alpha, 5, "--alpha");
  ParameterVector alpha;
  std::copy(al.begin(), al.end(), alpha.begin());
  if (!check_parameter_relation(alpha))
    throw UsageError("--alpha violates a0 + 2a1 + 3a2 + 2a3 + a4 = 1");
  auto in = parse_reals(a.init, 4, "--init");
  auto sp = parse_reals(a.span, 2, "--span");
  NumPoint init;
  std::copy(in.begin(), in.end(), init.phase.begin());
  init.t = sp[0];
  double t1 = sp[1];
  if (!(a.rtol > 0)) throw UsageError("--rtol must be positive");
  IntegratorConfig cfg;
  cfg.rtol = a.rtol;
  cfg.atol = a.rtol * 1e-2;

  Trajectory tr;
  try {
    tr = integrate(alpha, init, t1, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.csv.empty()) {
    std::ofstream f(a.csv);
    if (!f) throw UsageError("cannot write " + a.csv);
    write_csv(f, tr);
  }
  if (!a.plot.empty()) {
    std::ofstream f(a.plot);
    if (!f) throw UsageError("cannot write " + a.plot);
    write_svg(f, tr);
  }
  const auto& end = tr.back();
  if (as_json) {
    json alpha_j = json::array();
    for (const auto& v : alpha) alpha_j.push_back(to_string(v));
    out << json{{"command", "integrate"},
                {"alpha", alpha_j},
                {"t_start", init.t},
                {"t_end", tr.t.back()},
                {"end", end},
                {"steps", tr.steps},
                {"rejected", tr.rejected}}
               .dump(2)
        << "\n";
  } else {
    out << std::setprecision(17) << "t = " << tr.t.back() << ": x = " << end[0] << ", y = " << end[1]
        << ", z = " << end[2] << ", w = " << end[3] << "\n"
        << tr.steps << " steps, " << tr.rejected << " rejected\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the coupled Painleve VI system with E6(2) symmetry", "cpvi"};
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON document");
  bool dump_h = false;
  int dump_chart_j = -1;
  std::string dump_pipe;
  app.add_flag("--dump-hamiltonian", dump_h, "Same as: dump hamiltonian");
  app.add_option("--dump-chart", dump_chart_j, "Same as: dump chart J");
  app.add_option("--dump-pipeline", dump_pipe, "Same as: dump pipeline {k1|k2}");
  app.require_subcommand(0, 1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteOptions sopts;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--deg-phase", sopts.deg_phase, "First-integral ansatz degree in x, y, z, w");
  verify->add_option("--deg-t", sopts.deg_t, "First-integral ansatz degree in t");
  verify->add_flag("--json", as_json, "Emit a single JSON document");

  auto* integ = app.add_subcommand("integrate", "Integrate the coupled system numerically");
  IntegrateArgs ia;
  integ->add_option("--alpha", ia.alpha, "a0,a1,a2,a3,a4 as exact rationals p/q")->required();
  integ->add_option("--init", ia.init, "x,y,z,w")->required();
  integ->add_option("--span", ia.span, "t0,t1")->required();
  integ->add_option("--rtol", ia.rtol, "Relative tolerance (atol = rtol/100)");
  integ->add_option("--csv", ia.csv, "Write the trajectory as CSV");
  integ->add_option("--plot", ia.plot, "Write an SVG chart of the trajectory");
  integ->add_flag("--json", as_json, "Emit a single JSON document");

  auto* dump = app.add_subcommand("dump", "Print canonical text of an object");
  std::vector<std::string> what;
  dump->add_option("what", what, "hamiltonian | chart J | pipeline {k1|k2}")->required()->expected(1, 2);
  dump->add_flag("--json", as_json, "Emit a single JSON document");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return report(suite, run_suite(suite, sopts), as_json, out);
    if (*integ) return integrate_cmd(ia, as_json, out);
    if (*dump) {
      if (what[0] == "hamiltonian" && what.size() == 1) return dump_hamiltonian(as_json, out);
      if (what[0] == "chart" && what.size() == 2) {
        int j;
        try {
          j = std::stoi(what[1]);
        } catch (const std::exception&) {
          throw UsageError("chart index must be an integer");
        }
        return dump_chart(j, as_json, out);
      }
      if (what[0] == "pipeline" && what.size() == 2) return dump_pipeline_cmd(what[1], as_json, out);
      throw UsageError("dump expects: hamiltonian | chart J | pipeline {k1|k2}");
    }
    if (dump_h) return dump_hamiltonian(as_json, out);
    if (dump_chart_j >= 0 || app.count("--dump-chart")) return dump_chart(dump_chart_j, as_json, out);
    if (!dump_pipe.empty()) return dump_pipeline_cmd(dump_pipe, as_json, out);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParameterRelation& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AnsatzTooLarge& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StepLimitExceeded& e) {
    err << "integration stopped: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const BlowUp& e) {
    err << "integration stopped: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace cpvi
