#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ordlim/config.hpp"
#include "ordlim/counting.hpp"
#include "ordlim/recognizer.hpp"
#include "ordlim/semilinear.hpp"
#include "ordlim/tauberian.hpp"

namespace ordlim {

using Json = nlohmann::ordered_json;

/// Parses a JSON file; Error if unreadable, ParseError if malformed.
Json read_json_file(const std::string& path);

/// Floats are always printed with 10 significant digits.
std::string format_double(double x);

std::string format_tail(TailMode tail);
TailMode parse_tail(const std::string& text);

// Coefficient vectors are listed highest index first: "a": [a_r, ..., a_0].
Json to_json(const LinearSet& set);
Json to_json(const SemilinearSet& set);
Json to_json(const Recognizer& rec);
Json to_json(const CountSeries& cs);
Json to_json(const RadiusEstimate& estimate);
Json to_json(const DensityReport& report);

/// Schema violations raise DomainError.
LinearSet linear_set_from_json(const Json& doc);
/// An optional top-level "ambient" overrides the parts' ambients.
SemilinearSet semilinear_set_from_json(const Json& doc);
Recognizer recognizer_from_json(const Json& doc);

void write_count_series(std::ostream& out, const CountSeries& cs, OutputFormat format);
void write_radius(std::ostream& out, const Segment& segment, const RadiusEstimate& estimate, OutputFormat format);
/// CSV: '#' summary lines, then rows n,D,cesaro.
void write_density_report(std::ostream& out, const DensityReport& report, OutputFormat format);
/// Limit fields only; CSV as key,value rows.
void write_limit(std::ostream& out, const DensityReport& report, OutputFormat format);
void write_semilinear(std::ostream& out, const SemilinearSet& set, OutputFormat format);

std::string format_limit(const LimitValue& limit);

}  // namespace ordlim
