#include "polyzeta/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "polyzeta/cli/suites.hpp"
#include "polyzeta/exec.hpp"
#include "polyzeta/roots/isolation.hpp"

namespace polyzeta {
namespace {

void require_index(int n, int cap, bool force, const char* what) {
  if (n < 1 || n > kMaxPolynomialIndex)
    throw UsageError(std::string(what) + ": n must lie in [1, " + std::to_string(kMaxPolynomialIndex) + "]");
  if (n > cap && !force)
    throw UsageError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the default cap " +
                     std::to_string(cap) + " (use --force)");
}

int emit(const std::string& text, const GlobalOptions& g, std::ostream& out) {
  if (g.out) {
    std::ofstream f(*g.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + *g.out);
    f << text;
    if (!f) throw UsageError("cannot write output file " + *g.out);
  } else {
    out << text;
  }
  return kExitPass;
}

void apply_globals(const GlobalOptions& g) {
  if (g.jobs < 0) throw UsageError("--jobs must be non-negative");
  set_worker_count(g.jobs);
}

nlohmann::ordered_json report_json(const ReportDocument& doc) { return doc.to_json(); }

}  // namespace

nlohmann::ordered_json gen_document(Family family, int n) {
  if (n < 1 || n > kMaxPolynomialIndex)
    throw UsageError("gen: n must lie in [1, " + std::to_string(kMaxPolynomialIndex) + "]");
  const EvenPolynomial p = build(family, n);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int t = 0; t < n; ++t) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(t)];
    coeffs.push_back({{"t", t}, {"num", c.num().get_str()}, {"den", c.den().get_str()}});
  }
  nlohmann::ordered_json j;
  j["tool_version"] = std::string(kToolVersion);
  j["family"] = std::string(to_string(family));
  j["n"] = n;
  j["degree"] = p.degree();
  j["leading"] = p.leading().str();
  j["value_at_0"] = p.eval(0).str();
  j["value_at_1"] = p.eval(1).str();
  j["coefficients"] = std::move(coeffs);
  return j;
}

std::string gen_csv(Family family, int n) {
  if (n < 1 || n > kMaxPolynomialIndex)
    throw UsageError("gen: n must lie in [1, " + std::to_string(kMaxPolynomialIndex) + "]");
  const EvenPolynomial p = build(family, n);
  std::ostringstream os;
  os << "t,num,den\n";
  for (int t = 0; t < n; ++t) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(t)];
    os << t << ',' << c.num().get_str() << ',' << c.den().get_str() << '\n';
  }
  return os.str();
}

int cmd_gen(Family family, int n, GenFormat format, const GlobalOptions& g, std::ostream& out) {
  apply_globals(g);
  if (format == GenFormat::Csv) return emit(gen_csv(family, n), g, out);
  return emit(gen_document(family, n).dump(2) + "\n", g, out);
}

ReportDocument verify_document(const std::string& suite, int n_max, int digits, bool force) {
  const bool all = suite == "all";
  if (!all && suite != "structural" && suite != "roots" && suite != "integral")
    throw UsageError("verify: unknown suite '" + suite + "'");
  if (digits < 1 || digits > 1000) throw UsageError("verify: --digits must lie in [1, 1000]");
  const int bits = bits_for_digits(digits);

  ReportDocument doc;
  if (all || suite == "structural") {
    require_index(n_max, kStructuralCap, force, "verify structural");
    doc.suites.push_back(structural_suite(n_max));
    doc.suites.push_back(eulerian_identity_suite(n_max));
    doc.suites.push_back(pi_multiple_suite(n_max));
    doc.suites.push_back(property_suite(n_max, bits));
  }
  if (all || suite == "roots") {
    require_index(n_max, kRootsCap, force, "verify roots");
    doc.suites.push_back(roots_suite(n_max));
    if (n_max >= 3) {
      doc.suites.push_back(extremal_suite(n_max));
    } else {
      Check c = make_info("extremal_zeros", n_max);
      c.note = "needs n_max >= 3";
      doc.suites.push_back({"extremal_zeros", {c}});
    }
  }
  if (all || suite == "integral") {
    require_index(n_max, kIntegralCap, force, "verify integral");
    doc.suites.push_back(reference_suite(n_max, bits));
    doc.suites.push_back(integral_suite(n_max, bits));
  }
  return doc;
}

int cmd_verify(const std::string& suite, int n_max, int digits, bool force, const GlobalOptions& g,
               std::ostream& out) {
  apply_globals(g);
  ReportDocument doc = verify_document(suite, n_max, digits, force);
  if (!g.no_timestamp) doc.timestamp = utc_timestamp();
  emit(report_json(doc).dump(2) + "\n", g, out);
  return doc.any_fail() ? kExitFail : kExitPass;
}

ReportDocument roots_document(Family family, int n, int width_bits, bool force) {
  require_index(n, kRootsCap, force, "roots");
  if (width_bits < 1 || width_bits > 4096) throw UsageError("roots: --width-bits must lie in [1, 4096]");
  const Rational width = pow2(-width_bits);

  Suite s{"roots", {}};
  if (n == 1) {
    Check c = make_info("isolation", n);
    c.with_family(family).note = "constant polynomial, no roots";
    c.data = nlohmann::ordered_json{{"intervals", nlohmann::ordered_json::array()}};
    s.checks.push_back(std::move(c));
  } else {
    RootReport q = isolate_all(build(family, n).adapted(), width);
    Check c = make_check("isolation", n, q.all_real && q.all_simple && q.all_in_unit);
    c.with_family(family);
    nlohmann::ordered_json ivs = nlohmann::ordered_json::array();
    for (const auto& iv : q.intervals) {
      ivs.push_back({{"lo", iv.lo.str()},
                     {"hi", iv.hi.str()},
                     {"lo_decimal", BigFloat(iv.lo, width_bits + 64).to_decimal(30)},
                     {"hi_decimal", BigFloat(iv.hi, width_bits + 64).to_decimal(30)}});
    }
    c.data = nlohmann::ordered_json{{"all_real", q.all_real},
                                    {"all_simple", q.all_simple},
                                    {"all_in_unit", q.all_in_unit},
                                    {"largest_root_bound_ok", q.largest_root_bound_ok},
                                    {"intervals", std::move(ivs)}};
    s.checks.push_back(std::move(c));
    s.checks.push_back(make_check("endpoint_bound", n, q.largest_root_bound_ok).with_family(family));

    RootReport p = isolate_all(build(family, n - 1).adapted(), width);
    Check il = make_check("interlacing", n, check_interlacing(p, q));
    il.with_family(family).note = "roots of n-1 vs n in the adapted variable";
    s.checks.push_back(std::move(il));
  }
  ReportDocument doc;
  doc.suites.push_back(std::move(s));
  return doc;
}

int cmd_roots(Family family, int n, int width_bits, bool force, const GlobalOptions& g, std::ostream& out) {
  apply_globals(g);
  ReportDocument doc = roots_document(family, n, width_bits, force);
  if (!g.no_timestamp) doc.timestamp = utc_timestamp();
  emit(report_json(doc).dump(2) + "\n", g, out);
  return doc.any_fail() ? kExitFail : kExitPass;
}

}  // namespace polyzeta
