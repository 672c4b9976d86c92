#include "dimzero/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "dimzero/certificate_io.hpp"
#include "dimzero/certifier.hpp"
#include "dimzero/domination.hpp"
#include "dimzero/semiring_io.hpp"

namespace dimzero::cli {

namespace {

struct RunConfig {
  std::string builtin;
  std::optional<std::uint32_t> tropical_n;
  std::string semiring_path;
  std::size_t d = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  Caps caps;
  std::string out_path;
  std::string certificate_path;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Semiring load(const RunConfig& cfg) {
  if (!cfg.semiring_path.empty()) return load_semiring(cfg.semiring_path);
  if (cfg.builtin == "boolean") {
    if (cfg.tropical_n) throw UsageError("--tropical-n only applies to --builtin tropical");
    return boolean_semiring();
  }
  if (cfg.builtin == "tropical") {
    if (!cfg.tropical_n) throw UsageError("--builtin tropical needs --tropical-n <k>");
    return tropical_semiring(*cfg.tropical_n);
  }
  throw UsageError("exactly one of --builtin or --semiring is required");
}

void describe(const Semiring& s, std::ostream& out) {
  out << "semiring: " << s.size() << " element" << (s.size() == 1 ? "" : "s") << " {";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s.labels()[i];
  out << "}, zero=" << s.label(s.zero()) << ", one=" << s.label(s.one()) << ", fingerprint "
      << fingerprint_hex(s) << '\n';
}

// Prints axiom results; returns true when there are no violations.
bool report_axioms(const Semiring& s, std::ostream& out) {
  const auto violations = verify_axioms(s);
  out << "axioms:\n";
  for (int a = 0; a <= static_cast<int>(Axiom::ZeroAnnihilates); ++a) {
    const auto axiom = static_cast<Axiom>(a);
    out << "  " << axiom_name(axiom) << ": ";
    auto it = std::find_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
    if (it == violations.end()) {
      out << "pass\n";
    } else {
      out << "FAIL (" << it->message << ")\n";
    }
  }
  return violations.empty();
}

int cmd_check_semiring(const RunConfig& cfg, std::ostream& out) {
  const Semiring s = load(cfg);
  describe(s, out);
  if (!report_axioms(s, out)) {
    out << "order lemma: skipped (axioms fail)\nresult: not a finite idempotent semiring\n";
    return kFailure;
  }
  const LemmaReport lemma = verify_order_lemma(s);
  out << "order lemma:\n";
  for (const LemmaProperty* p : {&lemma.partial_order, &lemma.absorbs_sum, &lemma.least_upper}) {
    out << "  " << p->name << ": " << (p->holds ? "pass" : "FAIL") << " (" << p->checked << " checks";
    if (!p->holds) {
      out << ", counterexample";
      for (Element e : p->counterexample) out << ' ' << s.label(e);
    }
    out << ")\n";
  }
  if (!lemma.all_hold()) {
    out << "result: order lemma fails\n";
    return kFailure;
  }
  out << "result: valid finite idempotent semiring\n";
  return kOk;
}

void require_axioms(const Semiring& s) {
  const auto v = verify_axioms(s);
  if (!v.empty()) throw std::domain_error("not a finite idempotent semiring: " + v.front().message);
}

void print_checks(const std::vector<NamedCheck>& checks, std::ostream& out) {
  for (const auto& c : checks) out << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << '\n';
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Semiring s = load(cfg);
  require_axioms(s);
  const Certificate cert = certify_leq_nd(s, cfg.d, cfg.x, cfg.caps);
  const std::string text = write_certificate(cert);

  // The emitted bytes are what gets verified.
  const VerificationReport report = verify_certificate(s, parse_certificate(text));

  std::ostream& log = cfg.out_path.empty() ? err : out;
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    file << text;
    if (!file.flush()) throw std::runtime_error("write to '" + cfg.out_path + "' failed");
  }
  log << "certificate: x=" << cert.x << " <=_d n^d=" << cert.y << " (d=" << cert.d << "), branch "
      << branch_name(cert.branch) << ", |Hom(d,x)|=" << cert.order.size() << ", det(X)=" << to_fraction(cert.det_x)
      << '\n';
  if (cfg.verbose) print_checks(report.checks, log);
  log << "verification: " << (report.ok() ? "pass" : "FAIL (" + report.failures() + ")") << '\n';
  return report.ok() ? kOk : kFailure;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Semiring s = load(cfg);
  require_axioms(s);
  const OracleResult r = leq_d_oracle(s, cfg.d, cfg.x, cfg.y, cfg.caps.hom, cfg.caps.pairs);
  out << "x=" << cfg.x << " <=_d y=" << cfg.y << " (d=" << cfg.d << "): " << (r.holds ? "true" : "false") << '\n';
  out << "|Hom(d,x)|=" << r.hom_size << ", pairs=" << r.pairs << ", |Hom(x,y,x)|=" << r.composites.size() << '\n';
  if (r.holds) {
    out << "witness (nonzero coefficients):\n";
    for (std::size_t i = 0; i < r.composites.size(); ++i)
      if (r.coefficients[i] != 0) out << "  " << render(s, r.composites[i]) << " " << to_fraction(r.coefficients[i]) << '\n';
  }
  return r.holds ? kOk : kFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Semiring s = load(cfg);
  const Certificate cert = load_certificate(cfg.certificate_path);
  const VerificationReport report = verify_certificate(s, cert);
  out << "certificate: d=" << cert.d << ", x=" << cert.x << ", y=" << cert.y << ", branch "
      << branch_name(cert.branch) << '\n';
  if (cfg.verbose || !report.ok()) print_checks(report.checks, out);
  out << "verification: " << (report.ok() ? "pass" : "FAIL") << '\n';
  return report.ok() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certificates that x <=_d n^d in the matrix category of a finite idempotent semiring", "dimzero"};
  app.require_subcommand(1);

  auto add_source = [&cfg](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", cfg.builtin, "Built-in semiring")
                  ->check(CLI::IsMember({"boolean", "tropical"}));
    auto* f = sub->add_option("--semiring", cfg.semiring_path, "Semiring definition file");
    b->excludes(f);
    sub->add_option("--tropical-n", cfg.tropical_n, "Truncation bound of the tropical semiring");
    sub->add_flag("-v,--verbose", cfg.verbose, "Print every check");
  };
  auto add_caps = [&cfg](CLI::App* sub) {
    sub->add_option("--cap-hom", cfg.caps.hom, "Maximum |Hom(d,x)|")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--cap-pairs", cfg.caps.pairs, "Maximum |Hom(x,y)|*|Hom(y,x)|")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-cols", cfg.caps.columns, "Maximum n^d")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check-semiring", "Verify semiring axioms and the natural order");
  add_source(check);

  auto* certify = app.add_subcommand("certify", "Build and verify a certificate that x <=_d n^d");
  add_source(certify);
  add_caps(certify);
  certify->add_option("-d", cfg.d, "Object d")->required();
  certify->add_option("-x", cfg.x, "Object x")->required();
  certify->add_option("--out", cfg.out_path, "Certificate output path (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Decide x <=_d y by brute force");
  add_source(oracle);
  add_caps(oracle);
  oracle->add_option("-d", cfg.d, "Object d")->required();
  oracle->add_option("-x", cfg.x, "Object x")->required();
  oracle->add_option("-y", cfg.y, "Object y")->required();

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate file");
  add_source(verify);
  verify->add_option("certificate", cfg.certificate_path, "Certificate file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check_semiring(cfg, out);
    if (certify->parsed()) return cmd_certify(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const SizeLimitError& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: malformed semiring: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FingerprintMismatch& e) {
    err << "error: fingerprint mismatch: " << e.what() << '\n';
    return kFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const InternalCheckFailure& e) {
    err << "error: internal check failed: " << e.what() << '\n';
    return kFailure;
  } catch (const std::runtime_error& e) {
    // unreadable files
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dimzero::cli
