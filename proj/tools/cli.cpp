#include "cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "flowloop/knot_holder.hpp"
#include "flowloop/lawrence.hpp"
#include "flowloop/verify.hpp"
#include "flowloop/zhat.hpp"

namespace flowloop::cli {

namespace {

struct Options {
  std::string braid;
  int order = 8;
  std::string format = "text";
  int mmax = 3;
  int max_degree = 6;
  std::string suite = "all";
  std::string convention = "half";
  bool debug_mirror = false;
  std::optional<int> cap;
};

PhiOptions phi_options(const Options& o) {
  PhiOptions p;
  p.label_cap = o.cap;
  p.mirrored_negative_roles = o.debug_mirror;
  return p;
}

int cmd_zhat(const Options& o, std::ostream& out) {
  const BraidWord w = parse_braid(o.braid);
  const ZhatResult r = zhat(w, HalfInt::from_int(o.order), phi_options(o));
  if (o.format == "json") {
    out << zhat_json(r, w) << '\n';
    return 0;
  }
  out << "braid: " << render_braid(w) << '\n'
      << "genus: " << r.genus.to_string() << '\n'
      << "hopf_invariant: " << r.hopf_invariant.to_string() << '\n'
      << "prefactor: " << r.prefactor.to_string() << '\n'
      << "phi: " << r.phi.pretty() << '\n'
      << "zhat: " << r.zhat.pretty() << '\n';
  return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const BraidWord w = parse_braid(o.braid);
  const XSeries phi = phi_homogeneous(w, HalfInt::from_int(o.order), phi_options(o));
  if (o.format == "json")
    out << "{\"braid\": \"" << render_braid(w) << "\", \"phi\": " << series_to_json(phi) << "}\n";
  else
    out << "phi: " << phi.pretty() << '\n';
  return 0;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const BraidWord w = parse_braid(o.braid);
  if (o.mmax < 0) throw InputError("--mmax must be nonnegative");
  const Convention conv = o.convention == "under" ? Convention::Under : Convention::Half;
  const auto traces = graded_trace(w, o.mmax, conv);
  if (o.format == "json") {
    out << "[";
    for (std::size_t m = 0; m < traces.size(); ++m)
      out << (m ? ", " : "") << series_to_json(traces[m]);
    out << "]\n";
    return 0;
  }
  for (std::size_t m = 0; m < traces.size(); ++m) out << "Tr_" << m << ": " << traces[m].pretty() << '\n';
  return 0;
}

int cmd_alexander(const Options& o, std::ostream& out) {
  const BraidWord w = parse_braid(o.braid);
  const AlexanderResult r = alexander_classical(w, HalfInt::from_int(o.order));
  if (o.format == "json") {
    out << "{\"delta\": " << series_to_json(r.delta)
        << ", \"inv_delta\": " << series_to_json(r.inv_delta_series) << "}\n";
    return 0;
  }
  out << "Delta: " << r.delta.pretty() << '\n' << "(1-x)/Delta: " << r.inv_delta_series.pretty() << '\n';
  return 0;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const BraidWord w = parse_braid(o.braid);
  const Template t = build_template(w);
  const auto orbits = enumerate_orbits(t, o.max_degree);
  const XSeries zeta = zeta_classical(t, o.max_degree);
  if (o.format == "json") {
    out << "{\"orbits\": [";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      out << (k ? ", " : "") << "{\"degree\": " << orbits[k].degree
          << ", \"sign\": " << orbits[k].hyperbolic_sign << ", \"cycle\": [";
      for (std::size_t j = 0; j < orbits[k].cycle.size(); ++j) out << (j ? ", " : "") << orbits[k].cycle[j];
      out << "]}";
    }
    out << "], \"zeta\": " << series_to_json(zeta) << "}\n";
    return 0;
  }
  out << t.dump() << "degree sign cycle\n" << orbit_table(orbits) << "zeta: " << zeta.pretty() << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_suite(o.suite)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.property;
    if (!r.passed) out << " -- " << r.detail;
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flow loop counts of homogeneous braid closures"};
  app.require_subcommand(1);
  Options o;

  auto braid_opt = [&](CLI::App* c) { c->add_option("--braid", o.braid, "braid word, e.g. \"1 -2 1 -2\"")->required(); };
  auto format_opt = [&](CLI::App* c) {
    c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto phi_opts = [&](CLI::App* c) {
    braid_opt(c);
    format_opt(c);
    c->add_option("--order", o.order, "x-order of the series")->check(CLI::NonNegativeNumber);
    c->add_option("--cap", o.cap, "label cap (defaults to the order)");
    c->add_flag("--debug-mirror", o.debug_mirror, "use the rejected negative-crossing orientation");
  };

  auto* zhat_cmd = app.add_subcommand("zhat", "Phi and Zhat with the monomial prefactor");
  phi_opts(zhat_cmd);
  auto* phi_cmd = app.add_subcommand("phi", "Phi only");
  phi_opts(phi_cmd);
  auto* trace_cmd = app.add_subcommand("trace", "graded traces Tr_{V_{n,m}}");
  braid_opt(trace_cmd);
  format_opt(trace_cmd);
  trace_cmd->add_option("--mmax", o.mmax)->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--convention", o.convention)->check(CLI::IsMember({"half", "under"}));
  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial and (1-x)/Delta");
  braid_opt(alex_cmd);
  format_opt(alex_cmd);
  alex_cmd->add_option("--order", o.order)->check(CLI::NonNegativeNumber);
  auto* orbits_cmd = app.add_subcommand("orbits", "knot holder orbits and the classical zeta function");
  braid_opt(orbits_cmd);
  format_opt(orbits_cmd);
  orbits_cmd->add_option("--max-degree", o.max_degree)->check(CLI::NonNegativeNumber);
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"ring", "lawrence", "verma", "zhat", "template", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (zhat_cmd->parsed()) return cmd_zhat(o, out);
    if (phi_cmd->parsed()) return cmd_phi(o, out);
    if (trace_cmd->parsed()) return cmd_trace(o, out);
    if (alex_cmd->parsed()) return cmd_alexander(o, out);
    if (orbits_cmd->parsed()) return cmd_orbits(o, out);
    return cmd_verify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "verification failed: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace flowloop::cli
