#pragma once

#include "bgbc/properties.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bgbc {

enum class OutputFormat { json, csv, text };

OutputFormat format_from_name(const std::string& name);
std::string format_name(OutputFormat f);

// One batch run: which slice of the theory to compute and how to print it.
// threads only affects scheduling, never output bytes, so it is left out of
// the emitted config.
struct RunConfig {
  int N = 2;
  AlgebraType type = AlgebraType::A;
  int k_max = 2;
  std::optional<int> l_min;
  std::optional<int> l_max;
  Flavor flavor = Flavor::plus;
  std::optional<int> gamma_bound;  // required by the full flavor
  std::string g1_choice;           // empty -> default degree-1 witness
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  int threads = 1;
  bool inject_adjoint_sign_flip = false;  // test-only negative control

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct GradeRow {
  int k = 0;
  int l = 0;
  std::optional<long long> dim_basis;
  std::optional<long long> dim_g0_inv;
  std::optional<long long> dim_full_inv;
  std::optional<long long> dim_oracle;
};

// Assembled result of one command, ready to render in any format.  Rows are
// ordered by (k, l); properties keep suite order.
struct Report {
  std::string command;
  RunConfig config;
  std::string g1_text;  // nonempty only when a reduction witness was used
  std::vector<GradeRow> rows;
  std::vector<PropertyResult> properties;

  bool all_properties_passed() const;
};

std::string render(const Report& report);

// Weight-space dimension tables.
Report cmd_basis(const RunConfig& cfg);

// Invariant dimensions against the generated span, one row per grade.
Report cmd_invariants(const RunConfig& cfg);

// Full property suite at the configured scale.
Report cmd_verify(const RunConfig& cfg);

}  // namespace bgbc
