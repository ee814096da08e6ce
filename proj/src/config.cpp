#include "ordlim/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "ordlim/errors.hpp"

namespace ordlim {

void Config::validate() const {
  auto positive = [](std::uint64_t v, const char* name) {
    if (v == 0) throw DomainError(std::string("config: ") + name + " must be positive");
  };
  positive(truncation, "truncation");
  positive(mso_oracle_bound, "mso_oracle_bound");
  positive(ordinal_oracle_bound, "ordinal_oracle_bound");
  positive(ratio_window, "ratio_window");
  positive(rho_truncation, "rho_truncation");
  positive(piece_cap, "piece_cap");
  positive(matula_cap, "matula_cap");
  positive(lasso_state_cap, "lasso_state_cap");
  positive(spectrum_tuple_cap, "spectrum_tuple_cap");
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config '" + path + "': " + e.what(), e.byte);
  }
  if (!doc.is_object()) throw DomainError("config '" + path + "': expected a JSON object");

  Config config;
  auto read = [&](const char* key, auto& field) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (!v.is_number_unsigned()) throw DomainError("config: '" + std::string(key) + "' must be a nonnegative integer");
    field = v.get<std::remove_reference_t<decltype(field)>>();
  };
  read("truncation", config.truncation);
  read("mso_oracle_bound", config.mso_oracle_bound);
  read("ordinal_oracle_bound", config.ordinal_oracle_bound);
  read("ratio_window", config.ratio_window);
  read("rho_truncation", config.rho_truncation);
  read("piece_cap", config.piece_cap);
  read("matula_cap", config.matula_cap);
  read("lasso_state_cap", config.lasso_state_cap);
  read("spectrum_tuple_cap", config.spectrum_tuple_cap);
  if (doc.contains("format")) {
    const auto& f = doc.at("format");
    if (f == "csv") config.format = OutputFormat::Csv;
    else if (f == "json") config.format = OutputFormat::Json;
    else throw DomainError("config: 'format' must be \"csv\" or \"json\"");
  }
  for (const auto& [key, value] : doc.items()) {
    static const char* known[] = {"truncation",   "mso_oracle_bound", "ordinal_oracle_bound",
                                  "ratio_window", "rho_truncation",   "piece_cap",
                                  "matula_cap",   "lasso_state_cap",  "spectrum_tuple_cap",
                                  "format"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw DomainError("config: unknown key '" + key + "'");
  }
  config.validate();
  return config;
}

Config config_from_environment() {
  const char* path = std::getenv("ORDLIM_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_config(path);
}

}  // namespace ordlim
