#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ordlim {

enum class OutputFormat { Csv, Json };

/// Bounds and defaults shared by all modules. Exceeding a bound is an error.
struct Config {
  std::size_t truncation = 512;            // max series index N
  std::size_t mso_oracle_bound = 12;       // eval_finite and MSO oracle checks
  std::size_t ordinal_oracle_bound = 14;   // enumerate_by_norm
  std::size_t ratio_window = 8;
  std::size_t rho_truncation = 120;        // series length used when a limit needs rho
  std::size_t piece_cap = 20;              // signed_pieces
  std::uint64_t matula_cap = 1'000'000;
  std::size_t lasso_state_cap = 10;
  std::size_t spectrum_tuple_cap = 1u << 16;
  OutputFormat format = OutputFormat::Csv;

  /// Throws DomainError unless every bound is positive.
  void validate() const;
};

/// Reads a JSON config whose keys mirror the fields above; missing keys keep defaults.
Config load_config(const std::string& path);

/// Config from the file named by $ORDLIM_CONFIG, or defaults when unset.
Config config_from_environment();

}  // namespace ordlim
