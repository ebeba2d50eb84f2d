#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "ringcover/coverbuilder.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/finite_ring.hpp"
#include "ringcover/formulas.hpp"
#include "ringcover/json_io.hpp"
#include "ringcover/oracle.hpp"
#include "ringcover/sieve.hpp"
#include "ringcover/specparser.hpp"

namespace ringcover::cli {

namespace {

using io::Json;

constexpr const char* kGrammar = R"txt(Ring specifications:
  spec := term { "+" term }
  term := "F(" q ")" | "M(" n "," q ")" | "Id(" q [ "," lambda ] ")"
        | "A(" n "," q1 "," q2 ")" | "Z(" p "," k ")" | term "^" t
  q, q1, q2 are prime powers, p is a prime, integers are decimal and
  whitespace is ignored. Id defaults to lambda = 2.
Examples: "M(3,2)", "F(2)^3", "Id(9)+F(3)", "A(1,2,2)".

Exit codes: 0 success, 1 usage or parse error, 2 complexity cap,
3 internal invariant violation, 4 selftest failure.
Environment: SIGMA_THREADS (worker count, 0 = auto), SIGMA_ORACLE_CAP
(subspace-count cap of the oracle). Flags override the environment.)txt";

// Usage errors raised by the command handlers themselves.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

arith::PrimePower prime_power_arg(std::uint64_t v, const char* name) {
  auto q = arith::is_prime_power(v);
  if (!q) throw UsageError(std::string(name) + " = " + std::to_string(v) + " is not a prime power");
  return *q;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream o(path);
  if (!o) throw UsageError("cannot write " + path);
  o << j.dump(2) << '\n';
}

Json specs_to_json(const std::vector<RingFamily>& specs) {
  Json a = Json::array();
  for (const auto& s : specs) a.push_back(spec::format(s));
  return a;
}

Json element_to_json(const cover::RingElement& e) {
  return Json{{"h", e.h}, {"v", e.v}, {"beta", e.beta}};
}

struct Globals {
  bool json_errors = false;
  unsigned threads = 0;
};

// --- eval ------------------------------------------------------------------------

struct EvalArgs {
  std::string spec;
  bool unital = false;
  bool table = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const RingFamily spec = spec::parse(a.spec);
  const auto rep = formulas::classify(spec);
  Json j;
  j["spec"] = spec::format(spec);
  const Json report = io::report_to_json(rep);
  for (const auto& [k, v] : report.items()) j[k] = v;
  if (a.unital) {
    // Keep sigma_u first-class when it was explicitly requested.
    Json u;
    u["spec"] = j["spec"];
    u["sigma_u"] = j["sigma_u"];
    for (auto& [k, v] : j.items()) {
      if (k != "spec" && k != "sigma_u") u[k] = v;
    }
    j = std::move(u);
  }
  if (!a.table) {
    out << j.dump() << '\n';
    return kOk;
  }
  auto show = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  out << "spec          " << show(j["spec"]) << '\n';
  out << "sigma         " << show(j["sigma"]) << '\n';
  out << "sigma_u       " << show(j["sigma_u"]) << '\n';
  out << "has_unity     " << show(j["has_unity"]) << '\n';
  out << "elementary    " << show(j["elementary"]) << '\n';
  out << "u_elementary  " << show(j["u_elementary"]) << '\n';
  out << "method        " << show(j["method"]) << '\n';
  for (const auto& step : j["trail"]) {
    out << "trail         " << show(step["quotient"]) << "  (" << show(step["rule"]) << ")\n";
  }
  if (!j["note"].get<std::string>().empty()) out << "note          " << show(j["note"]) << '\n';
  return kOk;
}

// --- oracle ----------------------------------------------------------------------

struct OracleArgs {
  std::string spec;
  std::string ring_file;
  bool unital = false;
  double cap = 0;
  std::uint64_t max_order = 0;
  bool full_universe = false;
  std::string export_file;
  std::string verify_file;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.spec.empty() == a.ring_file.empty()) throw UsageError("give exactly one of SPEC or --ring FILE");
  RingCaps caps;
  if (a.max_order) caps.max_order = a.max_order;
  Json j;
  std::optional<FiniteRing> ring;
  if (!a.spec.empty()) {
    const RingFamily spec = spec::parse(a.spec);
    j["spec"] = spec::format(spec);
    ring.emplace(build(spec, caps));
  } else {
    ring.emplace(io::ring_from_json(read_json_file(a.ring_file), caps));
    j["ring"] = a.ring_file;
  }
  j["p"] = ring->p();
  j["dim"] = ring->dim();

  if (!a.verify_file.empty()) {
    const auto members = io::certificate_members_from_json(read_json_file(a.verify_file));
    const auto cert = oracle::verify_certificate(*ring, members);
    j["certificate"] = io::certificate_to_json(cert);
    j["valid"] = cert.closed && cert.proper && cert.covering;
    out << j.dump() << '\n';
    return kOk;
  }

  oracle::OracleOptions opts;
  opts.cap = a.cap;
  opts.reduce_universe = !a.full_universe;
  const auto res = oracle::sigma_brute(*ring, a.unital, opts);
  j[a.unital ? "sigma_u" : "sigma"] = io::to_json(res.sigma);
  j["subrings"] = res.subring_count;
  j["maximal"] = res.maximal_count;
  j["universe"] = res.universe_size;
  j["certificate"] = res.certificate ? io::certificate_to_json(*res.certificate) : Json(nullptr);
  if (!a.export_file.empty()) {
    write_json_file(a.export_file, res.certificate ? io::certificate_to_json(*res.certificate) : Json(nullptr));
  }
  out << j.dump() << '\n';
  return kOk;
}

// --- cover -----------------------------------------------------------------------

struct CoverArgs {
  unsigned n = 0;
  std::uint64_t q1 = 0;
  std::uint64_t q2 = 0;
  std::string verify;
  bool irredundancy = false;
  std::string export_file;
  std::uint64_t cap = 0;
};

int cmd_cover(const CoverArgs& a, const Globals& g, std::ostream& out) {
  const auto q1 = prime_power_arg(a.q1, "q1");
  const auto q2 = prime_power_arg(a.q2, "q2");
  const auto c = cover::build_A_cover(a.n, q1, q2);
  const auto formula = formulas::sigma_A(a.n, q1, q2);
  Json j;
  j["spec"] = spec::format(RingFamily{ARing{a.n, q1, q2}});
  j["n"] = c.n;
  j["q1"] = c.q1.value();
  j["q2"] = c.q2.value();
  j["q"] = c.q.value();
  j["d"] = c.d;
  j["size"] = c.size();
  j["sigma"] = formula.value ? io::to_json(*formula.value) : Json(nullptr);
  j["counts"] = Json{{"conjugates", c.conjugates.size()},
                     {"stabilizers", c.stabilizers.size()},
                     {"subfields", c.subfields.size()},
                     {"left_subfields", c.left_subfields.size()},
                     {"diagonal", c.diagonal}};
  cover::VerifyOptions vo;
  vo.cap = a.cap;
  vo.threads = g.threads;
  bool ok = true;
  if (!a.verify.empty()) {
    const auto res = a.verify == "raw" ? cover::verify_cover_raw(c, vo) : cover::verify_cover_reduced(c, vo);
    Json v{{"mode", a.verify}, {"ok", res.ok}, {"checked", res.checked}};
    v["uncovered"] = res.uncovered ? element_to_json(*res.uncovered) : Json(nullptr);
    j["verify"] = std::move(v);
    ok = ok && res.ok;
  }
  if (a.irredundancy) {
    const auto res = cover::irredundancy(c, vo);
    Json missing = Json::array();
    for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
      if (!res.witnesses[i]) missing.push_back(cover::member_name(c, i));
    }
    j["irredundancy"] = Json{{"irredundant", res.irredundant}, {"unwitnessed", missing}};
    ok = ok && res.irredundant;
  }
  if (!a.export_file.empty()) write_json_file(a.export_file, io::cover_to_json(c));
  out << j.dump() << '\n';
  return ok ? kOk : kInvariant;
}

// --- sieve commands -----------------------------------------------------------

struct EnumerateArgs {
  std::uint64_t N = 0;
  bool list = false;
  bool intervals = false;
  bool json = false;
  bool gaps = false;
  bool provenance = false;
};

int cmd_enumerate(const EnumerateArgs& a, const Globals& g, std::ostream& out) {
  sieve::SieveOptions so;
  so.threads = g.threads;
  so.provenance = a.provenance;
  const auto s = sieve::enumerate_covering_numbers(a.N, so);
  std::vector<std::uint64_t> gap_list;
  if (a.gaps) {
    for (std::uint64_t m = 3; m <= a.N; ++m) {
      if (!s.contains(m)) gap_list.push_back(m);
    }
  }
  if (a.json) {
    Json j;
    j["N"] = a.N;
    j["count"] = s.count();
    if (a.gaps) j["gaps"] = gap_list;
    Json fc;
    for (auto f : sieve::kFamilies) fc[sieve::to_string(f)] = s.family_counts[static_cast<int>(f)];
    j["family_counts"] = std::move(fc);
    if (s.provenance) {
      Json p = Json::object();
      for (const auto& [m, specs] : *s.provenance) p[std::to_string(m)] = specs_to_json(specs);
      j["provenance"] = std::move(p);
    }
    out << j.dump() << '\n';
    return kOk;
  }
  if (a.intervals) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    if (a.gaps) {
      for (auto m : gap_list) {
        if (!runs.empty() && runs.back().second + 1 == m) {
          runs.back().second = m;
        } else {
          runs.emplace_back(m, m);
        }
      }
    } else {
      runs = s.intervals();
    }
    for (const auto& [lo, hi] : runs) {
      if (lo == hi) {
        out << lo << '\n';
      } else {
        out << lo << '-' << hi << '\n';
      }
    }
    return kOk;
  }
  const auto values = a.gaps ? gap_list : s.values();
  for (auto m : values) {
    out << m;
    if (s.provenance && !a.gaps) {
      const auto& specs = s.provenance->at(m);
      for (std::size_t i = 0; i < specs.size(); ++i) out << (i ? ' ' : '\t') << spec::format(specs[i]);
    }
    out << '\n';
  }
  return kOk;
}

int cmd_member(std::uint64_t m, std::ostream& out) {
  const auto r = sieve::member(m);
  Json j;
  j["m"] = m;
  j["member"] = r.member;
  j["witnesses"] = specs_to_json(r.witnesses);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_gaps(std::uint64_t N, bool list, const Globals& g, std::ostream& out) {
  sieve::SieveOptions so;
  so.threads = g.threads;
  const auto gs = sieve::gaps(N, so);
  if (list) {
    for (auto m : gs) out << m << '\n';
    return kOk;
  }
  out << Json{{"N", N}, {"gaps", gs}}.dump() << '\n';
  return kOk;
}

int cmd_density(std::uint64_t N, const Globals& g, std::ostream& out) {
  if (N < 5) throw UsageError("density needs N >= 5");
  sieve::SieveOptions so;
  so.threads = g.threads;
  const auto d = sieve::density_report(N, so);
  Json j;
  j["N"] = d.N;
  j["count"] = d.count;
  j["lower"] = d.lower;
  j["upper"] = d.upper;
  j["ratio"] = d.ratio;
  j["pass"] = d.pass;
  out << j.dump() << '\n';
  return d.pass ? kOk : kInvariant;
}

// --- selftest --------------------------------------------------------------------

struct SelftestArgs {
  bool skip_large = false;
  int criterion = 0;
  bool json = false;
};

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
  acceptance::Options opts;
  opts.skip_large = a.skip_large;
  std::vector<int> ids;
  if (a.criterion) {
    ids.push_back(a.criterion);
  } else {
    for (int i = 1; i <= acceptance::kCriteria; ++i) ids.push_back(i);
  }
  bool ok = true;
  int passed = 0;
  Json rows = Json::array();
  for (int id : ids) {
    const auto r = acceptance::run(id, opts);
    passed += r.pass;
    ok = ok && (r.pass || r.known);
    if (a.json) {
      rows.push_back(Json{{"id", r.id},
                          {"title", r.title},
                          {"pass", r.pass},
                          {"known_failure", r.known},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
    } else {
      out << acceptance::format(r) << std::endl;
    }
  }
  if (a.json) {
    out << Json{{"passed", passed}, {"total", ids.size()}, {"ok", ok}, {"criteria", rows}}.dump() << '\n';
  } else {
    out << passed << "/" << ids.size() << " criteria pass" << std::endl;
  }
  return ok ? kOk : kSelftestFailed;
}

// --- errors ----------------------------------------------------------------------

int report_error(const Globals& g, std::ostream& err, int code, const std::string& kind, const std::string& message,
                 Json extra = Json::object()) {
  if (g.json_errors) {
    Json j{{"error", kind}, {"message", message}, {"exit_code", code}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    err << j.dump() << '\n';
  } else {
    err << "error (" << kind << "): " << message << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering numbers of finite rings: formulas, brute-force oracle, explicit covers and the sieve."};
  app.name("ringcover");
  app.footer(kGrammar);
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json_errors, "Print errors as JSON objects on stderr");
  app.add_option("--threads", g.threads, "Worker threads (0 = SIGMA_THREADS or auto)");

  EvalArgs eval;
  auto* s_eval = app.add_subcommand("eval", "Closed-form covering numbers of a ring spec");
  s_eval->add_option("SPEC", eval.spec, "Ring specification")->required();
  s_eval->add_flag("--unital", eval.unital, "Lead with sigma_u");
  s_eval->add_flag("--table", eval.table, "Aligned text instead of JSON");

  OracleArgs orc;
  auto* s_oracle = app.add_subcommand("oracle", "Brute-force covering number with a certificate");
  s_oracle->add_option("SPEC", orc.spec, "Ring specification");
  s_oracle->add_option("--ring", orc.ring_file, "Read the ring from a JSON file instead of SPEC");
  s_oracle->add_flag("--unital", orc.unital, "Cover by unital subrings");
  s_oracle->add_option("--cap", orc.cap, "Subspace-count cap (default SIGMA_ORACLE_CAP or 1e6)");
  s_oracle->add_option("--max-order", orc.max_order, "Largest ring order accepted by the builder");
  s_oracle->add_flag("--full-universe", orc.full_universe, "Cover every element, not one per cyclic subring");
  s_oracle->add_option("--export", orc.export_file, "Write the certificate to FILE");
  s_oracle->add_option("--verify", orc.verify_file, "Check the certificate in FILE instead of searching");

  CoverArgs cov;
  auto* s_cover = app.add_subcommand("cover", "Explicit minimal cover of A(n, q1, q2)");
  s_cover->add_option("n", cov.n)->required();
  s_cover->add_option("q1", cov.q1)->required();
  s_cover->add_option("q2", cov.q2)->required();
  s_cover->add_option("--verify", cov.verify, "Verify the cover")->check(CLI::IsMember({"raw", "reduced"}));
  s_cover->add_flag("--irredundancy", cov.irredundancy, "Check that every member is needed");
  s_cover->add_option("--export", cov.export_file, "Write the cover to FILE");
  s_cover->add_option("--cap", cov.cap, "Element or pair budget of the verifiers");

  EnumerateArgs en;
  auto* s_enum = app.add_subcommand("enumerate", "All covering numbers up to N");
  s_enum->add_option("N", en.N)->required();
  auto* fmt = s_enum->add_option_group("format");
  fmt->add_flag("--list", en.list, "One integer per line (default)");
  fmt->add_flag("--intervals", en.intervals, "Runs of consecutive values as lo-hi");
  fmt->add_flag("--json", en.json, "JSON report");
  fmt->require_option(0, 1);
  s_enum->add_flag("--gaps", en.gaps, "List the gaps instead (text) or add them (JSON)");
  s_enum->add_flag("--provenance", en.provenance, "Record generating ring specs");

  std::uint64_t member_m = 0;
  auto* s_member = app.add_subcommand("member", "Whether M is a covering number, with witnesses");
  s_member->add_option("M", member_m)->required();

  std::uint64_t gaps_n = 0;
  bool gaps_list = false;
  auto* s_gaps = app.add_subcommand("gaps", "Integers 3..N that are not covering numbers");
  s_gaps->add_option("N", gaps_n)->required();
  s_gaps->add_flag("--list", gaps_list, "One integer per line");

  std::uint64_t density_n = 0;
  auto* s_density = app.add_subcommand("density", "Count of covering numbers up to N against the proven bounds");
  s_density->add_option("N", density_n)->required();

  SelftestArgs st;
  auto* s_self = app.add_subcommand("selftest", "Run the acceptance checks");
  s_self->add_flag("--skip-large", st.skip_large, "Skip the N = 10^8 sieve run");
  s_self->add_option("--criterion", st.criterion, "Run one criterion")->check(CLI::Range(1, acceptance::kCriteria));
  s_self->add_flag("--json", st.json, "JSON summary");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  // CLI11 consumes arguments from the back.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    if (g.json_errors) return report_error(g, err, kUsage, "Usage", e.what());
    app.exit(e, out, err);
    return kUsage;
  }

  if ((*s_enum && en.json) || (*s_self && st.json)) g.json_errors = true;
  try {
    if (*s_eval) return cmd_eval(eval, out);
    if (*s_oracle) return cmd_oracle(orc, out);
    if (*s_cover) return cmd_cover(cov, g, out);
    if (*s_enum) return cmd_enumerate(en, g, out);
    if (*s_member) return cmd_member(member_m, out);
    if (*s_gaps) return cmd_gaps(gaps_n, gaps_list, g, out);
    if (*s_density) return cmd_density(density_n, g, out);
    if (*s_self) return cmd_selftest(st, out);
    return report_error(g, err, kUsage, "Usage", "no subcommand");
  } catch (const spec::ParseError& e) {
    return report_error(g, err, kUsage, e.kind(), e.what(),
                        Json{{"parse_error", spec::to_string(e.error_kind())}, {"offset", e.offset()}});
  } catch (const ComplexityCap& e) {
    return report_error(g, err, kCap, e.kind(), e.what(), Json{{"estimate", e.estimate()}});
  } catch (const DimensionCap& e) {
    return report_error(g, err, kCap, e.kind(), e.what());
  } catch (const MemoryCap& e) {
    return report_error(g, err, kCap, e.kind(), e.what());
  } catch (const InvariantViolation& e) {
    return report_error(g, err, kInvariant, e.kind(), e.what());
  } catch (const Error& e) {
    return report_error(g, err, kUsage, e.kind(), e.what());
  } catch (const UsageError& e) {
    return report_error(g, err, kUsage, "Usage", e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(g, err, kUsage, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return report_error(g, err, kInvariant, "Internal", e.what());
  }
}

}  // namespace ringcover::cli
