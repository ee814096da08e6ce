#include "ordlim/checks.hpp"

#include <functional>
#include <ostream>
#include <random>

#include "ordlim/counting.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/io.hpp"
#include "ordlim/matula.hpp"
#include "ordlim/mso.hpp"
#include "ordlim/recognizer.hpp"
#include "ordlim/semilinear.hpp"
#include "ordlim/tauberian.hpp"

namespace ordlim {

namespace {

std::vector<Ordinal> all_up_to(const Segment& beta, std::size_t n, const Config& config) {
  std::vector<Ordinal> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_by_norm(beta, k, config);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string check_counts(const Config& config) {
  for (const char* name : {"w", "w^2", "w^3", "w^w", "w^2*2+w", "e0"}) {
    const Segment beta = parse_segment(name);
    const auto cs = count_series(beta, 10, config);
    for (std::size_t n = 0; n <= 10; ++n)
      if (cs.values[n] != enumerate_by_norm(beta, n, config).size())
        return std::string(name) + ": count differs at n=" + std::to_string(n);
  }
  return {};
}

std::string check_matula(const Config&) {
  MatulaCoder coder;
  for (std::uint64_t m = 1; m <= 10'000; ++m)
    if (coder.encode(coder.decode(m)) != m) return "round trip fails at " + std::to_string(m);
  return {};
}

LinearSet random_set(std::mt19937_64& rng, const Segment& ambient, std::size_t r, bool allow_positive) {
  std::uniform_int_distribution<int> small(0, 3);
  LinearSet set;
  set.ambient = ambient;
  for (std::size_t i = 0; i <= r; ++i) {
    set.offset.push_back(small(rng));
    set.period.push_back(small(rng));
  }
  const int t = std::uniform_int_distribution<int>(0, allow_positive ? 2 : 1)(rng);
  set.tail = t == 0 ? TailMode::None : t == 1 ? TailMode::Any : TailMode::Positive;
  return set;
}

std::string check_intersection(const Config& config) {
  std::mt19937_64 rng(20240501);
  const Segment beta = parse_segment("w^w");
  const auto universe = all_up_to(beta, 8, config);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const LinearSet x = random_set(rng, beta, r, true);
    const LinearSet y = random_set(rng, beta, r, true);
    const auto both = intersect_linear(x, y);
    for (const auto& z : universe)
      if ((member(x, z) && member(y, z)) != (both && member(*both, z)))
        return "trial " + std::to_string(trial) + " disagrees at " + format_ordinal(z);
  }
  return {};
}

std::string check_inclusion_exclusion(const Config& config) {
  std::mt19937_64 rng(7);
  const Segment beta = parse_segment("w^3");
  const auto universe = all_up_to(beta, 10, config);
  for (int trial = 0; trial < 30; ++trial) {
    SemilinearSet set{beta, {}};
    for (int k = 0; k < 3; ++k)
      set.parts.push_back(random_set(rng, beta, std::uniform_int_distribution<std::size_t>(0, 2)(rng), false));
    const Series counts = semilinear_count_series(set, 10, config);
    Series brute(11, BigInt(0));
    for (const auto& z : universe)
      if (member(set, z)) brute[z.norm()] += 1;
    if (counts != brute) return "trial " + std::to_string(trial) + " miscounts the union";
  }
  return {};
}

std::string check_catalog_finite(const Config& config) {
  for (const auto& entry : builtin_catalog()) {
    if (!validate_recognizer(entry.recognizer).empty()) return entry.name + ": axioms fail";
    for (std::size_t n = 0; n <= config.mso_oracle_bound; ++n)
      if (eval_finite(*entry.formula, n, config) != eval_recognizer(entry.recognizer, Ordinal::finite(n)))
        return entry.name + ": disagrees at n=" + std::to_string(n);
  }
  return {};
}

std::string check_spectrum(const Config& config) {
  for (const char* name : {"w", "w^2", "w^w", "e0"}) {
    const Segment beta = parse_segment(name);
    const auto universe = all_up_to(beta, 8, config);
    for (const auto& entry : builtin_catalog()) {
      const SemilinearSet accepted = spectrum(entry.recognizer, beta, config);
      for (const auto& z : universe)
        if (member(accepted, z) != eval_recognizer(entry.recognizer, z))
          return entry.name + " over " + name + ": disagrees at " + format_ordinal(z);
    }
  }
  return {};
}

std::string check_even_density(const Config& config) {
  LinearSet even;
  even.offset = {0};
  even.period = {2};
  const DensityReport report = density_report(SemilinearSet{even.ambient, {even}}, 40, config);
  for (std::size_t n = 0; n <= 40; ++n)
    if (report.values[n] != (n % 2 == 0 ? 1 : 0)) return "D(" + std::to_string(n) + ") is not alternating";
  if (report.limit_kind != LimitKind::Cesaro || report.limit.exact != Rational(1, 2))
    return "limit is " + format_limit(report.limit);
  return {};
}

std::string check_complement(const Config& config) {
  for (const char* name : {"w", "w^w", "e0"})
    for (const auto& entry : builtin_catalog()) {
      const Segment beta = parse_segment(name);
      const auto p = asymptotic_probability(entry.recognizer, beta, 30, config);
      const auto q = asymptotic_probability(negate(entry.recognizer), beta, 30, config);
      for (std::size_t n = 0; n <= 30; ++n)
        if (p.values[n] + q.values[n] != 1) return entry.name + " over " + name + ": fails at n=" + std::to_string(n);
    }
  return {};
}

std::string check_telescoping(const Config& config) {
  const Segment beta = parse_segment("w^w");
  const std::size_t n = 200;
  Config wide = config;
  wide.truncation = std::max<std::size_t>(config.truncation, n);
  LinearSet whole = whole_segment(beta, 0);
  whole.period = {0};
  const Series s = schur_factor(whole).expand(n);
  const Series t = tail_series(beta, 0, n, wide).values;
  if (multiply(s, t, n) != count_series(beta, n, wide).values) return "S*T differs from c";
  return {};
}

}  // namespace

std::vector<CheckResult> run_checks(const Config& config) {
  const std::vector<std::pair<const char*, std::function<std::string(const Config&)>>> checks = {
      {"counts-vs-enumeration", check_counts},
      {"matula-round-trip", check_matula},
      {"intersection-vs-membership", check_intersection},
      {"inclusion-exclusion-counts", check_inclusion_exclusion},
      {"catalog-vs-finite-mso", check_catalog_finite},
      {"spectrum-vs-evaluation", check_spectrum},
      {"even-set-density", check_even_density},
      {"complement-probability", check_complement},
      {"telescoping-identity", check_telescoping},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks) {
    CheckResult result{name, false, {}};
    try {
      result.detail = check(config);
      result.passed = result.detail.empty();
      if (result.passed) result.detail = "ok";
    } catch (const std::exception& e) {
      result.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

void write_checks(std::ostream& out, const std::vector<CheckResult>& results, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json doc = Json::array();
    for (const auto& r : results) doc.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << doc.dump(2) << "\n";
    return;
  }
  out << "check,result,detail\n";
  for (const auto& r : results) out << r.name << "," << (r.passed ? "PASS" : "FAIL") << "," << r.detail << "\n";
}

}  // namespace ordlim
