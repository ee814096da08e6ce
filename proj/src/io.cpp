#include "ordlim/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

std::string regime_name(const std::optional<Regime>& regime) { return regime ? format_regime(*regime) : "none"; }

std::string kind_name(LimitKind kind) { return kind == LimitKind::Cesaro ? "cesaro" : "plain"; }

std::string form_name(LimitValue::Form form) {
  switch (form) {
    case LimitValue::Form::None: return "none";
    case LimitValue::Form::Zero: return "zero";
    case LimitValue::Form::Exact: return "exact";
    case LimitValue::Form::RhoExpression: return "rho-expression";
  }
  return "none";
}

std::string join_reversed(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = v.size(); i-- > 0;) {
    out += std::to_string(v[i]);
    if (i > 0) out += ";";
  }
  return out;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw DomainError("expected a JSON object");
  if (!doc.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::uint64_t natural(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned()) throw DomainError(what + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

// "[x_r, ..., x_0]" to index order.
std::vector<std::uint64_t> coefficient_list(const Json& v, const std::string& what) {
  if (!v.is_array()) throw DomainError(what + " must be an array");
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[v.size() - 1 - k] = natural(v[k], what + " entry");
  return out;
}

Json reversed_array(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (std::size_t i = v.size(); i-- > 0;) out.push_back(v[i]);
  return out;
}

Segment segment_field(const Json& v) {
  if (!v.is_string()) throw DomainError("'ambient' must be a string");
  return parse_segment(v.get<std::string>());
}

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

Json polynomial_json(const Series& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "'", e.byte);
  }
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string format_tail(TailMode tail) {
  switch (tail) {
    case TailMode::None: return "none";
    case TailMode::Any: return "any";
    case TailMode::Positive: return "positive";
  }
  return "none";
}

TailMode parse_tail(const std::string& text) {
  if (text == "none") return TailMode::None;
  if (text == "any") return TailMode::Any;
  if (text == "positive") return TailMode::Positive;
  throw DomainError("tail must be none, any or positive, got '" + text + "'");
}

Json to_json(const LinearSet& set) {
  Json out;
  out["r"] = set.length();
  out["a"] = reversed_array(set.offset);
  out["b"] = reversed_array(set.period);
  out["tail"] = format_tail(set.tail);
  out["ambient"] = format_segment(set.ambient);
  return out;
}

Json to_json(const SemilinearSet& set) {
  Json out;
  out["ambient"] = format_segment(set.ambient);
  out["parts"] = Json::array();
  for (const auto& part : set.parts) out["parts"].push_back(to_json(part));
  return out;
}

Json to_json(const Recognizer& rec) {
  Json out;
  out["K"] = rec.states;
  out["a"] = rec.start;
  out["W"] = Json::array();
  for (State s = 0; s < rec.states; ++s)
    if (rec.accepts(s)) out["W"].push_back(s);
  out["F"] = Json::array();
  for (const auto& f : rec.maps) out["F"].push_back(f.image());
  return out;
}

Json to_json(const CountSeries& cs) {
  Json out;
  out["segment"] = format_segment(cs.segment);
  out["values"] = Json::array();
  for (const auto& v : cs.values) out["values"].push_back(v.str());
  return out;
}

Json to_json(const RadiusEstimate& estimate) {
  Json out;
  out["rho"] = format_double(estimate.rho);
  out["raw_rho"] = format_double(estimate.raw_rho);
  out["spread"] = format_double(estimate.spread);
  out["extrapolated_spread"] = format_double(estimate.extrapolated_spread);
  out["method"] = estimate.used_extrapolation ? "extrapolated" : "raw";
  out["grid"] = estimate.grid;
  out["window"] = Json::array();
  for (double w : estimate.window) out["window"].push_back(format_double(w));
  return out;
}

Json to_json(const DensityReport& report) {
  Json out;
  out["ambient"] = format_segment(report.ambient);
  out["regime"] = regime_name(report.regime);
  Json limit;
  limit["kind"] = kind_name(report.limit_kind);
  limit["form"] = form_name(report.limit.form);
  limit["value"] = format_limit(report.limit);
  if (report.limit.form == LimitValue::Form::RhoExpression) {
    limit["numerator"] = polynomial_json(report.limit.expression.numerator);
    limit["denominator"] = polynomial_json(report.limit.expression.denominator);
  }
  if (report.limit.form != LimitValue::Form::None) limit["numeric"] = format_double(report.limit.numeric);
  out["limit"] = limit;
  out["d"] = report.d;
  if (report.rho_used) out["rho"] = to_json(*report.rho_used);
  if (report.schur_factor) {
    out["schur_factor"] = {{"numerator", format_polynomial(report.schur_factor->numerator)},
                           {"denominator", format_polynomial(report.schur_factor->denominator)}};
  }
  if (!report.values.empty()) {
    out["values"] = rational_array(report.values);
    out["cesaro"] = rational_array(report.cesaro);
    out["skipped"] = report.skipped;
  }
  return out;
}

LinearSet linear_set_from_json(const Json& doc) {
  LinearSet set;
  set.offset = coefficient_list(field(doc, "a"), "'a'");
  set.period = coefficient_list(field(doc, "b"), "'b'");
  if (doc.contains("r") && natural(doc.at("r"), "'r'") + 1 != set.offset.size())
    throw DomainError("'r' disagrees with the length of 'a'");
  if (doc.contains("tail")) {
    if (!doc.at("tail").is_string()) throw DomainError("'tail' must be a string");
    set.tail = parse_tail(doc.at("tail").get<std::string>());
  }
  if (doc.contains("ambient")) set.ambient = segment_field(doc.at("ambient"));
  set.validate();
  return set;
}

SemilinearSet semilinear_set_from_json(const Json& doc) {
  const Json& parts = field(doc, "parts");
  if (!parts.is_array()) throw DomainError("'parts' must be an array");
  SemilinearSet set;
  std::optional<Segment> ambient;
  if (doc.contains("ambient")) ambient = segment_field(doc.at("ambient"));
  for (const auto& p : parts) {
    LinearSet part = linear_set_from_json(p);
    if (ambient) {
      part.ambient = *ambient;
    } else if (!set.parts.empty() && part.ambient != set.parts.front().ambient) {
      throw DomainError("parts have different ambients");
    }
    set.parts.push_back(std::move(part));
  }
  if (ambient) set.ambient = *ambient;
  else if (!set.parts.empty()) set.ambient = set.parts.front().ambient;
  return set;
}

Recognizer recognizer_from_json(const Json& doc) {
  Recognizer rec;
  rec.states = natural(field(doc, "K"), "'K'");
  if (rec.states == 0) throw DomainError("'K' must be positive");
  rec.start = static_cast<State>(natural(field(doc, "a"), "'a'"));
  if (rec.start >= rec.states) throw DomainError("'a' is not a state");
  rec.accepting.assign(rec.states, false);
  const Json& w = field(doc, "W");
  if (!w.is_array()) throw DomainError("'W' must be an array");
  for (const auto& s : w) {
    const auto v = natural(s, "'W' entry");
    if (v >= rec.states) throw DomainError("'W' entry is not a state");
    rec.accepting[v] = true;
  }
  const Json& maps = field(doc, "F");
  if (!maps.is_array() || maps.size() < 2) throw DomainError("'F' must list at least F_0 and F_{r+1}");
  for (const auto& m : maps) {
    if (!m.is_array() || m.size() != rec.states) throw DomainError("each map in 'F' must list K images");
    std::vector<State> image;
    for (const auto& s : m) {
      const auto v = natural(s, "'F' entry");
      if (v >= rec.states) throw DomainError("'F' entry is not a state");
      image.push_back(static_cast<State>(v));
    }
    rec.maps.emplace_back(std::move(image));
  }
  const auto violations = validate_recognizer(rec);
  if (!violations.empty()) throw DomainError("recognizer violates its axioms: " + violations.front().message);
  return rec;
}

std::string format_limit(const LimitValue& limit) {
  switch (limit.form) {
    case LimitValue::Form::None: return "none";
    case LimitValue::Form::Zero:
    case LimitValue::Form::Exact: return to_string(limit.exact);
    case LimitValue::Form::RhoExpression:
      if (limit.expression.denominator == Series{BigInt(1)}) return format_polynomial(limit.expression.numerator, "rho");
      return "(" + format_polynomial(limit.expression.numerator, "rho") + ")/(" +
             format_polynomial(limit.expression.denominator, "rho") + ")";
  }
  return "none";
}

void write_count_series(std::ostream& out, const CountSeries& cs, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << to_json(cs).dump(2) << "\n";
    return;
  }
  out << "n,value\n";
  for (std::size_t n = 0; n < cs.values.size(); ++n) out << n << "," << cs.values[n].str() << "\n";
}

void write_radius(std::ostream& out, const Segment& segment, const RadiusEstimate& estimate, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json doc = to_json(estimate);
    doc["segment"] = format_segment(segment);
    out << doc.dump(2) << "\n";
    return;
  }
  out << "segment,rho,method,raw_rho,spread,extrapolated_spread,grid\n"
      << format_segment(segment) << "," << format_double(estimate.rho) << ","
      << (estimate.used_extrapolation ? "extrapolated" : "raw") << "," << format_double(estimate.raw_rho) << ","
      << format_double(estimate.spread) << "," << format_double(estimate.extrapolated_spread) << "," << estimate.grid
      << "\n";
}

void write_limit(std::ostream& out, const DensityReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json doc = to_json(report);
    doc.erase("values");
    doc.erase("cesaro");
    doc.erase("skipped");
    out << doc.dump(2) << "\n";
    return;
  }
  out << "key,value\n";
  out << "ambient," << format_segment(report.ambient) << "\n";
  out << "regime," << regime_name(report.regime) << "\n";
  out << "kind," << kind_name(report.limit_kind) << "\n";
  out << "limit," << format_limit(report.limit) << "\n";
  if (report.limit.form != LimitValue::Form::None) out << "numeric," << format_double(report.limit.numeric) << "\n";
  out << "d," << report.d << "\n";
  if (report.rho_used) {
    out << "rho," << format_double(report.rho_used->rho) << "\n";
    out << "rho_spread," << format_double(report.rho_used->spread) << "\n";
  }
}

void write_density_report(std::ostream& out, const DensityReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << to_json(report).dump(2) << "\n";
    return;
  }
  out << "# ambient=" << format_segment(report.ambient) << " regime=" << regime_name(report.regime)
      << " kind=" << kind_name(report.limit_kind) << " limit=" << format_limit(report.limit);
  if (report.limit.form != LimitValue::Form::None) out << " numeric=" << format_double(report.limit.numeric);
  if (report.rho_used)
    out << " rho=" << format_double(report.rho_used->rho) << " spread=" << format_double(report.rho_used->spread);
  out << "\n";
  out << "n,D,cesaro\n";
  for (std::size_t n = 0; n < report.values.size(); ++n)
    out << n << "," << to_string(report.values[n]) << "," << to_string(report.cesaro[n]) << "\n";
}

void write_semilinear(std::ostream& out, const SemilinearSet& set, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << to_json(set).dump(2) << "\n";
    return;
  }
  out << "part,tail,a,b\n";
  for (std::size_t k = 0; k < set.parts.size(); ++k) {
    const auto& p = set.parts[k];
    out << k << "," << format_tail(p.tail) << "," << join_reversed(p.offset) << "," << join_reversed(p.period) << "\n";
  }
}

}  // namespace ordlim
