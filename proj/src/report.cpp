#include "bgbc/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bgbc {

namespace {

using json = nlohmann::ordered_json;

struct GradeKey {
  int k;
  int l;
};

// Charge is carried by the fermionic modes only, at most N of weight zero
// plus one per unit of weight, so +-N(k+1) bounds every populated charge.
std::vector<GradeKey> grade_sweep(const RunConfig& cfg) {
  std::vector<GradeKey> out;
  for (int k = 0; k <= cfg.k_max; ++k) {
    int lo = -cfg.N * (k + 1);
    int hi = cfg.N * (k + 1);
    if (cfg.l_min) lo = std::max(lo, *cfg.l_min);
    if (cfg.l_max) hi = std::min(hi, *cfg.l_max);
    for (int l = lo; l <= hi; ++l) out.push_back({k, l});
  }
  return out;
}

std::optional<PolyVectorField> witness_of(const RunConfig& cfg) {
  if (cfg.g1_choice.empty()) return std::nullopt;
  return parse_vector_field(cfg.g1_choice, cfg.N);
}

json config_json(const Report& report) {
  const RunConfig& cfg = report.config;
  json c;
  c["command"] = report.command;
  c["N"] = cfg.N;
  c["type"] = std::string(1, algebra_type_letter(cfg.type));
  c["k_max"] = cfg.k_max;
  c["l_min"] = cfg.l_min ? json(*cfg.l_min) : json(nullptr);
  c["l_max"] = cfg.l_max ? json(*cfg.l_max) : json(nullptr);
  c["flavor"] = cfg.flavor == Flavor::plus ? "plus" : "full";
  if (cfg.gamma_bound) c["gamma_bound"] = *cfg.gamma_bound;
  if (!report.g1_text.empty()) c["g1"] = report.g1_text;
  c["seed"] = cfg.seed;
  return c;
}

json dim_json(const std::optional<long long>& d) {
  return d ? json(*d) : json(nullptr);
}

std::string render_json(const Report& report) {
  json doc;
  doc["config"] = config_json(report);
  doc["tables"] = json::array();
  for (const auto& row : report.rows) {
    json entry;
    entry["grade"] = {{"k", row.k}, {"l", row.l}};
    json dims;
    dims["basis"] = dim_json(row.dim_basis);
    dims["g0_inv"] = dim_json(row.dim_g0_inv);
    dims["full_inv"] = dim_json(row.dim_full_inv);
    dims["oracle"] = dim_json(row.dim_oracle);
    entry["dims"] = dims;
    doc["tables"].push_back(entry);
  }
  doc["properties"] = json::array();
  for (const auto& p : report.properties) {
    json entry;
    entry["name"] = p.name;
    entry["status"] = p.passed ? "pass" : "fail";
    if (!p.witness.empty()) entry["witness"] = p.witness;
    doc["properties"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string csv_cell(const std::optional<long long>& d) {
  return d ? std::to_string(*d) : std::string();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  if (!report.g1_text.empty()) os << "# g1: " << report.g1_text << "\n";
  os << "k,l,dim_basis,dim_g0_inv,dim_full_inv,dim_oracle\n";
  for (const auto& row : report.rows)
    os << row.k << ',' << row.l << ',' << csv_cell(row.dim_basis) << ','
       << csv_cell(row.dim_g0_inv) << ',' << csv_cell(row.dim_full_inv) << ','
       << csv_cell(row.dim_oracle) << "\n";
  return os.str();
}

std::string text_cell(const std::optional<long long>& d) {
  return d ? std::to_string(*d) : std::string("-");
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  const RunConfig& cfg = report.config;
  os << "command: " << report.command << "\n";
  os << "N: " << cfg.N << "  type: " << algebra_type_letter(cfg.type)
     << "  k_max: " << cfg.k_max << "  flavor: "
     << (cfg.flavor == Flavor::plus ? "plus" : "full");
  if (cfg.gamma_bound) os << "  gamma_bound: " << *cfg.gamma_bound;
  if (cfg.l_min || cfg.l_max) {
    os << "  l:";
    if (cfg.l_min) os << " >= " << *cfg.l_min;
    if (cfg.l_max) os << (cfg.l_min ? "," : "") << " <= " << *cfg.l_max;
  }
  os << "\n";
  if (!report.g1_text.empty()) os << "g1: " << report.g1_text << "\n";
  os << "seed: " << cfg.seed << "\n";
  if (!report.rows.empty()) {
    os << "\n" << std::setw(4) << "k" << std::setw(4) << "l" << std::setw(7) << "basis"
       << std::setw(8) << "g0_inv" << std::setw(10) << "full_inv" << std::setw(8)
       << "oracle" << "\n";
    for (const auto& row : report.rows)
      os << std::setw(4) << row.k << std::setw(4) << row.l << std::setw(7)
         << text_cell(row.dim_basis) << std::setw(8) << text_cell(row.dim_g0_inv)
         << std::setw(10) << text_cell(row.dim_full_inv) << std::setw(8)
         << text_cell(row.dim_oracle) << "\n";
  }
  if (!report.properties.empty()) {
    os << "\n";
    int passed = 0;
    for (const auto& p : report.properties) {
      os << (p.passed ? "pass " : "FAIL ") << p.name;
      if (!p.witness.empty()) os << "  [" << p.witness << "]";
      os << "\n";
      if (p.passed) ++passed;
    }
    os << "summary: " << passed << "/" << report.properties.size()
       << " properties passed\n";
  }
  return os.str();
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    default: return "text";
  }
}

void RunConfig::validate() const {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  if (threads < 1) throw std::invalid_argument("thread count must be at least 1");
  if (type == AlgebraType::C && N % 2 != 0)
    throw std::invalid_argument("type C requires even N (symplectic pairing)");
  if (l_min && l_max && *l_min > *l_max)
    throw std::invalid_argument("l range is empty the wrong way: l_min > l_max");
  if (flavor == Flavor::full && !gamma_bound)
    throw std::invalid_argument(
        "full flavor weight spaces are infinite without a gamma bound; set one");
  if (gamma_bound && *gamma_bound < 0)
    throw std::invalid_argument("gamma bound must be nonnegative");
  if (!g1_choice.empty()) {
    const PolyVectorField g1 = parse_vector_field(g1_choice, N);
    if (g1.is_zero() || g1.degree() != 1)
      throw std::invalid_argument("g1 must be a nonzero degree-1 vector field");
  }
}

bool Report::all_properties_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

std::string render(const Report& report) {
  switch (report.config.format) {
    case OutputFormat::json: return render_json(report);
    case OutputFormat::csv: return render_csv(report);
    default: return render_text(report);
  }
}

Report cmd_basis(const RunConfig& cfg) {
  cfg.validate();
  Report report;
  report.command = "basis";
  report.config = cfg;
  for (const auto& g : grade_sweep(cfg)) {
    const auto ws = enumerate_basis(cfg.flavor, cfg.N, g.k, g.l, cfg.gamma_bound);
    if (ws->dim() == 0) continue;
    GradeRow row;
    row.k = g.k;
    row.l = g.l;
    row.dim_basis = static_cast<long long>(ws->dim());
    report.rows.push_back(row);
  }
  return report;
}

Report cmd_invariants(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.flavor != Flavor::plus)
    throw std::invalid_argument("invariants are computed on the plus flavor");
  Report report;
  report.command = "invariants";
  report.config = cfg;
  const auto g1 = witness_of(cfg);
  report.g1_text = to_text(g1 ? *g1 : default_g1(cfg.N));
  const auto grades = grade_sweep(cfg);
  // Warm the shared caches once so workers only read them.
  oracle_span(cfg.type, cfg.N, cfg.k_max);
  std::vector<GradeRow> slots(grades.size());
  auto compute = [&](std::size_t i) {
    const auto& g = grades[i];
    const auto rep = invariant_space(cfg.type, cfg.N, g.k, g.l, g1);
    GradeRow row;
    row.k = g.k;
    row.l = g.l;
    row.dim_basis =
        static_cast<long long>(enumerate_basis(Flavor::plus, cfg.N, g.k, g.l)->dim());
    row.dim_g0_inv = rep.dim_g0;
    row.dim_full_inv = rep.dim_full;
    row.dim_oracle = rep.dim_oracle;
    slots[i] = row;
  };
  if (cfg.threads == 1 || grades.size() < 2) {
    for (std::size_t i = 0; i < grades.size(); ++i) compute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int n_workers = std::min<int>(cfg.threads, static_cast<int>(grades.size()));
    for (int w = 0; w < n_workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < grades.size(); i = next.fetch_add(1))
          compute(i);
      });
    for (auto& t : pool) t.join();
  }
  // Assembly is ordered by (k, l) regardless of worker completion.
  for (const auto& row : slots)
    if ((row.dim_full_inv && *row.dim_full_inv > 0) ||
        (row.dim_oracle && *row.dim_oracle > 0))
      report.rows.push_back(row);
  return report;
}

Report cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.format == OutputFormat::csv)
    throw std::invalid_argument("verify has no dimension table; csv output is undefined");
  Report report;
  report.command = "verify";
  report.config = cfg;
  PropertyOptions opt;
  opt.N = cfg.N;
  opt.k_max = cfg.k_max;
  opt.type = cfg.type;
  opt.seed = cfg.seed;
  opt.g1_choice = cfg.g1_choice;
  opt.inject_adjoint_sign_flip = cfg.inject_adjoint_sign_flip;
  report.properties = run_property_suite(opt);
  return report;
}

}  // namespace bgbc
