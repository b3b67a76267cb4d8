#include "tropcrit/io/cli.hpp"

#include "tropcrit/chow/chow.hpp"
#include "tropcrit/cycle/balancing.hpp"
#include "tropcrit/io/document.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tropcrit {

namespace {

const std::vector<std::string> kCommands = {"balance",     "intersect",       "convolve",      "ma-measure",
                                            "ma-polytope", "critical",        "chow",          "chow-eval",
                                            "weight-polytope", "torus-minimal", "d0-check"};

struct Settings {
  std::string command;
  std::vector<std::string> inputs;
  std::string format = "doc";
  std::string sign;
  std::string tau;
  bool multi = false;
  bool skip_balance = false;
  bool verbose = false;
  std::size_t threads = 1;
};

// Input failure that should map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string name;
  std::string text;
};

Source read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return {"<stdin>", buf.str()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError(path + ": cannot open file");
  buf << file.rdbuf();
  return {path, buf.str()};
}

template <class F>
auto parse_from(const Source& s, F&& parse) {
  try {
    return parse(s.text);
  } catch (const ParseError& e) {
    throw InputError(s.name + ":" + e.what());
  }
}

QuotientVector parse_tau(const std::string& text, std::size_t n) {
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rat(item));
    } catch (const std::invalid_argument& e) {
      throw InputError("--tau: " + std::string(e.what()));
    }
  }
  if (v.size() != n + 1)
    throw InputError("--tau: expected " + std::to_string(n + 1) + " comma-separated rationals, got " +
                     std::to_string(v.size()));
  return canonical_rep(v);
}

Json indices_json(const Indicator& ind) {
  Json a = Json::array();
  for (auto i : ind) a.push_back(i);
  return a;
}

Json face_json(const Polyhedron& face, const std::vector<std::size_t>& factors) {
  auto rows = [&](const RatMatrix& m) {
    Json a = Json::array();
    for (const auto& r : m) a.push_back(to_json(from_chart(r, factors)));
    return a;
  };
  return {{"vertices", rows(face.points())}, {"rays", rows(face.rays())}, {"lineality", rows(face.lineality())}};
}

Json criticality_json(const CriticalityReport& r, bool verified) {
  Json j;
  j["verdict"] = r.critical ? "critical" : "not critical";
  j["critical"] = r.critical;
  j["routes"] = {{"lp", r.lp_route}, {"rank", r.rank_route}, {"agree", r.routes_agree}};
  j["p_ma"] = to_json(r.p_ma);
  Json cert;
  if (r.critical) {
    cert["kind"] = "convex combination of P_MA vertices equal to 0";
    cert["coefficients"] = to_json(r.coefficients);
  } else {
    cert["kind"] = "separating one-parameter subgroup";
    cert["lambda"] = to_json(r.lambda->coords());
    cert["derivative"] = to_string(*r.derivative);
    cert["violated_subset"] = indices_json(*r.violated_subset);
  }
  j["certificate"] = std::move(cert);
  j["verified"] = verified;
  j["caveat"] = r.caveat;
  return j;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix + "/" + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "/" + std::to_string(i), out);
  } else if (j.is_array()) {
    out += prefix;
    for (const auto& x : j) out += "\t" + (x.is_string() ? x.get<std::string>() : x.dump());
    out += "\n";
  } else {
    out += prefix + "\t" + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string render(const Settings& s, Kind kind, const Json& payload, const Polytope* polytope = nullptr) {
  if (s.format == "doc") return emit_document(kind, payload);
  if (polytope) return vertex_list(*polytope);
  std::string out;
  flatten(payload, "", out);
  return out;
}

std::size_t arity(const std::string& command) {
  return command == "intersect" || command == "convolve" ? 2 : 1;
}

int dispatch(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::size_t want = arity(s.command);
  std::vector<std::string> paths = s.inputs;
  if (paths.empty() && want == 1) paths.push_back("-");
  if (paths.size() != want)
    throw InputError(s.command + ": expected " + std::to_string(want) + " input(s), got " +
                     std::to_string(paths.size()));
  if (std::count(paths.begin(), paths.end(), "-") > 1) throw InputError("standard input can be read only once");
  if (!s.sign.empty() && s.command != "convolve") throw InputError("--sign applies only to convolve");
  if (!s.tau.empty() && s.command != "chow-eval") throw InputError("--tau applies only to chow-eval");
  if (s.multi && s.command != "chow") throw InputError("--multi applies only to chow");

  std::vector<Source> sources;
  for (const auto& p : paths) sources.push_back(read_input(p, in));
  auto log = [&](const std::string& line) {
    if (s.verbose) err << s.command << ": " << line << "\n";
  };

  IntersectionOptions opts;
  opts.threads = s.threads;
  ParseOptions popts;
  popts.check_balance = !s.skip_balance;

  auto cycle_at = [&](std::size_t i, const ParseOptions& o) {
    TropicalCycle c = parse_from(sources[i], [&](const std::string& t) { return parse_cycle(t, o); });
    log(sources[i].name + ": cycle of dimension " + std::to_string(c.dim()) + " with " +
        std::to_string(c.cells().size()) + " cells");
    return c;
  };
  auto emit_cycle = [&](const TropicalCycle& c) {
    log("result has dimension " + std::to_string(c.dim()) + " and " + std::to_string(c.cells().size()) + " cells");
    out << render(s, Kind::cycle, to_json(c));
    return kExitOk;
  };

  const std::string& cmd = s.command;
  if (cmd == "balance") {
    ParseOptions skip;
    skip.check_balance = false;
    const TropicalCycle c = cycle_at(0, skip);
    BalanceReport r;
    try {
      r = is_balanced(c);
    } catch (const StructuralError& e) {
      throw InputError(sources[0].name + ": " + e.what());
    }
    Json j = {{"command", cmd}, {"balanced", r.balanced}, {"verdict", r.balanced ? "balanced" : "unbalanced"}};
    if (!r.balanced) {
      j["face"] = face_json(*r.face, c.factors());
      j["defect"] = to_json(r.defect_quotient);
    }
    out << render(s, Kind::report, j);
    return r.balanced ? kExitOk : kExitNegative;
  }
  if (cmd == "intersect") {
    const TropicalCycle a = cycle_at(0, popts), b = cycle_at(1, popts);
    if (a.factors() != b.factors()) throw InputError("intersect: the cycles live in different ambients");
    return emit_cycle(stable_intersection(a, b, opts));
  }
  if (cmd == "convolve") {
    if (s.sign != "+" && s.sign != "-" && s.sign != "plus" && s.sign != "minus")
      throw InputError("convolve: --sign must be + or - (or plus/minus)");
    const TropicalCycle a = cycle_at(0, popts), b = cycle_at(1, popts);
    if (a.factors() != b.factors()) throw InputError("convolve: the cycles live in different ambients");
    return emit_cycle(minkowski_convolve(a, b, s.sign == "+" || s.sign == "plus" ? 1 : -1));
  }
  if (cmd == "chow") {
    const TropicalCycle x = cycle_at(0, popts);
    if (x.factors().size() != 1) throw InputError("chow: input must live in a single projective quotient");
    try {
      return emit_cycle(s.multi ? chow_multi(x) : chow_hypersurface(x));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (cmd == "ma-measure") {
    const TropicalCycle x = cycle_at(0, popts);
    if (x.factors().size() != 1) throw InputError("ma-measure: input must live in a single projective quotient");
    std::optional<MAMeasure> m;
    try {
      m = ma_measure(x, opts);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    log("total mass " + to_string(m->total_mass()));
    out << render(s, Kind::measure, to_json(*m));
    return kExitOk;
  }
  if (cmd == "chow-eval") {
    const TropicalCycle x = cycle_at(0, popts);
    if (x.factors().size() != 1) throw InputError("chow-eval: input must live in a single projective quotient");
    if (s.tau.empty()) throw InputError("chow-eval: --tau is required");
    const QuotientVector tau = parse_tau(s.tau, x.n());
    const Rat value = chow_green_eval(x, tau, opts);
    const Json j = {{"command", cmd},
                    {"convention", "sum over X .st (H^d + tau) of m_p * min_i (p - tau)_i"},
                    {"tau", to_json(tau.coords())},
                    {"value", to_string(value)}};
    out << render(s, Kind::report, j);
    return kExitOk;
  }
  if (cmd == "ma-polytope" || cmd == "critical") {
    const MAMeasure m = parse_from(sources[0], [](const std::string& t) { return parse_measure(t); });
    log("measure with " + std::to_string(m.atoms().size()) + " atoms, total mass " + to_string(m.total_mass()));
    if (cmd == "ma-polytope") {
      const MAPolytope p = ma_polytope(m);
      out << render(s, Kind::polytope, to_json(p.polytope), &p.polytope);
      return kExitOk;
    }
    const CriticalityReport r = is_critical(m);
    const bool ok = verify(r, m);
    if (!ok) throw InvariantViolation("critical: the certificate failed verification");
    Json j = criticality_json(r, ok);
    j["command"] = cmd;
    out << render(s, Kind::report, j);
    return r.critical ? kExitOk : kExitNegative;
  }
  if (cmd == "weight-polytope" || cmd == "torus-minimal") {
    const TropicalPolynomial f = parse_from(sources[0], [](const std::string& t) { return parse_trop_poly(t); });
    log("polynomial with " + std::to_string(f.terms().size()) + " terms");
    Polytope p;
    try {
      p = residual_polytope(f);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (cmd == "weight-polytope") {
      out << render(s, Kind::polytope, to_json(p), &p);
      return kExitOk;
    }
    const bool minimal = torus_minimal(f);
    const MembershipCertificate cert = membership(p, QuotientVector::zero(f.n()).coords());
    if (cert.member != minimal || !verify_membership(p, QuotientVector::zero(f.n()).coords(), cert))
      throw InvariantViolation("torus-minimal: membership certificate disagrees with the verdict");
    Json j = {{"command", cmd},
              {"minimal", minimal},
              {"verdict", minimal ? "minimal" : "not minimal"},
              {"residual_polytope", to_json(p)}};
    if (minimal) j["certificate"] = {{"coefficients", to_json(cert.coefficients)}};
    else j["certificate"] = {{"separator", to_json(cert.separator)}};
    out << render(s, Kind::report, j);
    return minimal ? kExitOk : kExitNegative;
  }
  if (cmd == "d0-check") {
    const PointConfiguration c = parse_from(sources[0], [](const std::string& t) { return parse_point_config(t); });
    const D0Report r = d0_crosscheck(c);
    Json j = {{"command", cmd},
              {"consistent", r.consistent()},
              {"scale", to_string(r.scale)},
              {"pl_route", {{"residual_polytope", to_json(r.residual)}, {"torus_minimal", r.torus_minimal}}},
              {"polytope_route", criticality_json(r.criticality, verify(r.criticality, config_measure(c)))},
              {"polytopes_equal", r.polytopes_equal},
              {"verdicts_equal", r.verdicts_equal},
              {"verdict", r.criticality.critical ? "critical" : "not critical"}};
    if (!r.consistent()) {
      j["diff"] = r.diff;
      out << render(s, Kind::report, j);
      err << "d0-check: routes disagree\n" << r.diff;
      return kExitInternal;
    }
    out << render(s, Kind::report, j);
    return r.criticality.critical ? kExitOk : kExitNegative;
  }
  throw InputError("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact tropical Monge-Ampere measures, Chow hypersurfaces and torus criticality", "tropcrit"};
  app.add_option("command", s.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("inputs", s.inputs, "Input documents; '-' or nothing reads standard input");
  app.add_option("--format", s.format, "Output format: doc (JSON document) or tsv (flat table; polytopes as vertex lists)")
      ->check(CLI::IsMember({"doc", "tsv"}));
  app.add_option("--sign", s.sign, "convolve: + for the sum, - for the difference");
  app.add_option("--tau", s.tau, "chow-eval: comma-separated rationals, one per homogeneous coordinate");
  app.add_flag("--multi", s.multi, "chow: use the multi-diagonal construction");
  app.add_flag("--skip-balance", s.skip_balance, "Accept unbalanced cycle documents");
  app.add_flag("--verbose", s.verbose, "Progress notes on standard error");
  app.add_option("--threads", s.threads, "Worker threads for stable intersections; output does not depend on it")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tropcrit: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return dispatch(s, in, out, err);
  } catch (const InputError& e) {
    err << "tropcrit: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "tropcrit: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructuralError& e) {
    err << "tropcrit: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    err << "tropcrit: internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "tropcrit: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace tropcrit
