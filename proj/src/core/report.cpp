#include "cyclogcd/report.hpp"

#include "cyclogcd/density.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/oracles.hpp"
#include "cyclogcd/residue.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace cyclogcd {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json optional_number(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return nullptr;
}

json envelope(const char* subcommand, json config) {
  return json{{"subcommand", subcommand}, {"version", library_version()}, {"config", std::move(config)}};
}

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

// Comment lines carrying the run identity ahead of a CSV table.
std::string csv_preamble(const json& doc) {
  std::ostringstream os;
  os << "# cyclogcd " << library_version() << " " << doc.at("subcommand").get<std::string>() << "\n";
  os << "# config " << doc.at("config").dump() << "\n";
  return os.str();
}

std::string run_gcd_seq(const GcdSeqConfig& c, const RunOptions& o) {
  const auto rows = gcd_seq_exact(c.a, c.b, c.M, c.N, c.n_max, o.threads);
  json doc = envelope("gcd-seq", {{"a", c.a}, {"b", c.b}, {"M", c.M}, {"N", c.N}, {"n_max", c.n_max}});
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc) << "n,gcd,log_gcd,distinct_prime_count\n";
    for (const auto& r : rows)
      os << r.n << "," << r.gcd_value.get_str() << "," << fmt_double(r.log_gcd) << ","
         << (r.distinct_prime_count ? std::to_string(*r.distinct_prime_count) : "") << "\n";
    return os.str();
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n}, {"gcd", r.gcd_value.get_str()}, {"log_gcd", r.log_gcd}};
    row["distinct_prime_count"] = r.distinct_prime_count ? json(*r.distinct_prime_count) : json(nullptr);
    arr.push_back(std::move(row));
  }
  doc["rows"] = std::move(arr);
  doc["verification"] = {{"status", "exact evaluation"}};
  return render_json(doc);
}

std::string run_champion(const ChampionConfig& c, const RunOptions& o) {
  const ChampionParams& p = c.params;
  json config{{"a", p.a}, {"b", p.b}, {"N", p.N}, {"M", p.index_a()}, {"x", p.x}, {"delta", p.delta},
              {"curve_c", p.curve_c}};
  validate(p);
  const ChampionReport r = p.index_a() == p.index_b() ? cyclogcd::run_champion(p, o.threads)
                                                      : champion_generalized(p, o.threads);
  json doc = envelope("champion", std::move(config));
  doc["n"] = r.n.get_str();
  doc["representation_count"] = r.representations.size();
  doc["distinct_primes"] = r.distinct_primes;
  doc["log_gcd_lower_bound"] = r.log_gcd_lower_bound;
  doc["pigeonhole_floor"] = to_u64(r.pigeonhole_floor);
  doc["curve_ratio"] = optional_number(r.curve_ratio);
  json certs = json::array();
  for (const auto& cert : r.certificates)
    certs.push_back({{"p", cert.p}, {"m", cert.m}, {"divides_a", cert.divides_a}, {"divides_b", cert.divides_b}});
  doc["verification"] = {{"status", r.verified ? "verified" : "unverified"},
                         {"certificates", std::move(certs)},
                         {"pair_count", r.pair_count},
                         {"K", r.K.get_str()},
                         {"omega", r.omega},
                         {"curve_value", optional_number(r.curve_value)}};
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc);
    os << "# n=" << r.n.get_str() << " representation_count=" << r.representations.size()
       << " log_gcd_lower_bound=" << fmt_double(r.log_gcd_lower_bound)
       << " pigeonhole_floor=" << r.pigeonhole_floor.get_str()
       << " curve_ratio=" << (r.curve_ratio ? fmt_double(*r.curve_ratio) : "") << "\n";
    os << "p,m,divides_a,divides_b\n";
    for (const auto& cert : r.certificates)
      os << cert.p << "," << cert.m << "," << (cert.divides_a ? "true" : "false") << ","
         << (cert.divides_b ? "true" : "false") << "\n";
    return os.str();
  }
  return render_json(doc);
}

std::string run_density(const DensityConfig& c, const RunOptions& o) {
  json config{{"N", c.N}, {"d", c.d}, {"a", c.a}, {"b", c.b}, {"x", c.x}};
  const DensityPrediction pred = predicted_density(c.N, c.d, c.a, c.b);
  const EmpiricalDensity emp = empirical_density(c.x, pred, c.a, c.b, o.threads);
  json doc = envelope("density", std::move(config));
  std::vector<u64> ls;
  std::vector<unsigned> es;
  for (const auto& [l, e] : pred.exponents) {
    ls.push_back(l);
    es.push_back(e);
  }
  doc["N"] = c.N;
  doc["d"] = c.d;
  doc["l_i"] = ls;
  doc["e_i"] = es;
  doc["ratio"] = fmt_rational(pred.ratio);
  doc["ratio_decimal"] = pred.ratio.get_d();
  doc["count"] = emp.count;
  doc["expected"] = emp.expected;
  doc["relative_error"] = emp.relative_error;
  doc["verification"] = {{"tolerance", emp.tolerance}, {"within_tolerance", emp.within_tolerance}};
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc) << "N,d,l_i,e_i,ratio,ratio_decimal,count,expected,relative_error,tolerance\n";
    std::string lcol, ecol;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      lcol += (i ? ";" : "") + std::to_string(ls[i]);
      ecol += (i ? ";" : "") + std::to_string(es[i]);
    }
    os << c.N << "," << c.d << "," << lcol << "," << ecol << "," << fmt_rational(pred.ratio) << ","
       << fmt_double(pred.ratio.get_d()) << "," << emp.count << "," << fmt_double(emp.expected) << ","
       << fmt_double(emp.relative_error) << "," << fmt_double(emp.tolerance) << "\n";
    return os.str();
  }
  return render_json(doc);
}

std::string run_delta(const DeltaConfig& c, const RunOptions& o) {
  const auto rows = delta_table(c.limit, o.threads);
  json doc = envelope("delta", {{"limit", c.limit}, {"squarefree", c.squarefree}});
  u64 best_n = 0, best = 0;
  for (const auto& r : rows) {
    const u64 v = c.squarefree ? r.delta_squarefree : r.delta;
    if (v > best) {
      best = v;
      best_n = r.n;
    }
  }
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc) << (c.squarefree ? "n,delta,delta_squarefree\n" : "n,delta\n");
    for (const auto& r : rows) {
      os << r.n << "," << r.delta;
      if (c.squarefree) os << "," << r.delta_squarefree;
      os << "\n";
    }
    return os.str();
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n}, {"delta", r.delta}};
    if (c.squarefree) row["delta_squarefree"] = r.delta_squarefree;
    arr.push_back(std::move(row));
  }
  doc["rows"] = std::move(arr);
  doc["max"] = {{"n", best_n}, {"value", best}};
  doc["verification"] = {{"status", "dual-route agreement"}};
  return render_json(doc);
}

std::string run_verify_lemma(const LemmaConfig& c, const RunOptions& o) {
  json config{{"N", c.N}, {"a", c.a}, {"b", c.b}, {"p_max", c.p_max}, {"m_max", c.m_max}};
  const LemmaSweep s = verify_lemma_range(c.N, c.a, c.b, c.p_max, c.m_max, o.threads);
  json doc = envelope("verify-lemma", std::move(config));
  doc["primes_scanned"] = s.primes_scanned;
  doc["qualified_primes"] = s.qualified_primes;
  doc["cases"] = s.cases;
  doc["failures"] = 0;
  doc["verification"] = {{"status", "verified"}};
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc) << "N,a,b,p_max,m_max,primes_scanned,qualified_primes,cases,failures\n";
    os << c.N << "," << c.a << "," << c.b << "," << c.p_max << "," << c.m_max << "," << s.primes_scanned << ","
       << s.qualified_primes << "," << s.cases << ",0\n";
    return os.str();
  }
  return render_json(doc);
}

std::string run_ff(const FFConfig& c, const RunOptions& o) {
  json config{{"q", c.params.q},         {"k", c.params.k},         {"n0", c.params.n0},
              {"m", c.params.index_a()}, {"v", c.params.index_b()}, {"a_poly", c.a_poly},
              {"b_poly", c.b_poly},      {"deg_min", c.deg_min},    {"deg_max", c.deg_max}};
  if (c.verify) config["n_cap"] = c.n_cap;
  if (c.deg_min < 1 || c.deg_min > c.deg_max) throw InvalidArgument("need 1 <= deg-min <= deg-max");
  const auto [p, e] = ff::prime_power(c.params.q);
  const ff::FieldPtr base = ff::fq_context(p, e);
  const ff::Poly a = ff::parse_poly(c.a_poly, base), b = ff::parse_poly(c.b_poly, base);
  const auto construction = ff::FFConstruction::create(c.params, a, b);
  const auto& choice = construction.choice();

  json doc = envelope(c.verify ? "ff-verify" : "ff", std::move(config));
  doc["r"] = choice.r;
  doc["t"] = choice.t;
  doc["Q"] = choice.Q;
  json per_n = json::array();
  json checks = json::array();
  std::optional<double> min_growth;
  bool all_ok = true;
  std::ostringstream csv;
  csv << "N,n,pi_count,predicted,predicted_decimal,deg_gcd,certified_bound\n";

  for (unsigned N = c.deg_min; N <= c.deg_max; ++N) {
    const ff::ScanResult scan = ff::ff_scan(construction, N, o.threads);
    json row{{"N", N}, {"n", scan.n.get_str()}, {"pi_count", scan.count()}};
    row["certified_bound"] = static_cast<u64>(N) * scan.count();
    json check{{"N", N}, {"irreducibles", scan.irreducible_count}, {"excluded_dividing_ab", scan.excluded_count}};
    if (scan.predicted) {
      row["predicted"] = fmt_rational(*scan.predicted);
      row["predicted_decimal"] = scan.predicted->get_d();
      const double sqrt_bound = 5.0 * std::pow(static_cast<double>(choice.Q), N / 2.0);
      const bool within = std::fabs(static_cast<double>(scan.count()) - scan.predicted->get_d()) <= sqrt_bound;
      check["count_within_5_sqrt_QN"] = within;
      all_ok = all_ok && within;
    } else {
      row["predicted"] = nullptr;
      row["predicted_decimal"] = nullptr;
    }
    std::string deg_col;
    if (c.verify) {
      const ff::DirectVerify dv = ff::ff_direct_verify(construction, scan, c.n_cap);
      const ff::EquivalenceCheck eq = ff::ff_equivalence_check(construction, N, c.n_cap, o.threads);
      row["deg_gcd"] = dv.deg_gcd;
      deg_col = std::to_string(dv.deg_gcd);
      check["deg_gcd_at_least_bound"] = dv.deg_gcd >= dv.certified_bound;
      check["ratio_deg_gcd_over_n"] = dv.ratio_to_n;
      check["equivalence_discrepancies"] = eq.discrepancies;
      check["irreducibles_dividing_gcd"] = eq.divisors;
      if (eq.discrepancies != 0)
        throw VerificationFailure("criterion disagrees with exact divisibility for " +
                                  std::to_string(eq.discrepancies) + " irreducibles at N = " + std::to_string(N) +
                                  (eq.samples.empty() ? "" : ", e.g. " + eq.samples.front()));
      if (N >= 2) min_growth = min_growth ? std::min(*min_growth, dv.ratio_to_n) : dv.ratio_to_n;
    }
    csv << N << "," << scan.n.get_str() << "," << scan.count() << ","
        << (scan.predicted ? fmt_rational(*scan.predicted) : "") << ","
        << (scan.predicted ? fmt_double(scan.predicted->get_d()) : "") << "," << deg_col << ","
        << static_cast<u64>(N) * scan.count() << "\n";
    per_n.push_back(std::move(row));
    checks.push_back(std::move(check));
  }
  doc["per_N"] = std::move(per_n);
  json verification{{"per_N", std::move(checks)}, {"status", all_ok ? "verified" : "count outside sqrt band"}};
  if (c.verify) verification["min_growth_ratio_N_ge_2"] = optional_number(min_growth);
  doc["verification"] = std::move(verification);
  if (!construction.generalized()) {
    const Rational joint = ff::joint_density(construction.index_lcm(), choice.r);
    const Rational expo = ff::exponent_reading_density(construction.index_lcm(), choice.r);
    doc["diagnostics"] = {{"density_joint_independence", fmt_rational(joint)},
                          {"density_exponent_reading", fmt_rational(expo)},
                          {"density_readings_diverge", joint != expo}};
  }
  if (o.format == Format::Csv) return csv_preamble(doc) + csv.str();
  return render_json(doc);
}

std::string run_monitor(const MonitorConfig& c, const RunOptions& o) {
  const MonitorResult m = upper_bound_monitor(c.a, c.b, c.n_min, c.n_max, o.threads);
  json doc = envelope("monitor", {{"a", c.a}, {"b", c.b}, {"n_min", c.n_min}, {"n_max", c.n_max}});
  doc["max_ratio"] = m.max_ratio;
  doc["argmax"] = m.argmax;
  doc["verification"] = {{"status", "reported"}};
  if (o.format == Format::Csv) {
    std::ostringstream os;
    os << csv_preamble(doc) << "a,b,n_min,n_max,max_ratio,argmax\n";
    os << c.a << "," << c.b << "," << c.n_min << "," << c.n_max << "," << fmt_double(m.max_ratio) << "," << m.argmax
       << "\n";
    return os.str();
  }
  return render_json(doc);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const char* library_version() { return CYCLOGCD_VERSION; }

const char* subcommand_name(const RunConfig& config) {
  return std::visit(Overloaded{[](const GcdSeqConfig&) { return "gcd-seq"; },
                               [](const ChampionConfig&) { return "champion"; },
                               [](const DensityConfig&) { return "density"; },
                               [](const DeltaConfig&) { return "delta"; },
                               [](const LemmaConfig&) { return "verify-lemma"; },
                               [](const FFConfig& c) { return c.verify ? "ff-verify" : "ff"; },
                               [](const MonitorConfig&) { return "monitor"; }},
                    config);
}

std::string run_report(const RunConfig& config, const RunOptions& options) {
  return std::visit(Overloaded{[&](const GcdSeqConfig& c) { return run_gcd_seq(c, options); },
                               [&](const ChampionConfig& c) { return run_champion(c, options); },
                               [&](const DensityConfig& c) { return run_density(c, options); },
                               [&](const DeltaConfig& c) { return run_delta(c, options); },
                               [&](const LemmaConfig& c) { return run_verify_lemma(c, options); },
                               [&](const FFConfig& c) { return run_ff(c, options); },
                               [&](const MonitorConfig& c) { return run_monitor(c, options); }},
                    config);
}

}  // namespace cyclogcd
