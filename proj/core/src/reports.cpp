#include "podkit/reports.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "podkit/errors.hpp"
#include "podkit/version.hpp"

namespace podkit {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw NumericFailure("reports: cannot open " + path.string() + " for writing");
  out << text;
}

json envelope(const ReportContext& context) {
  json inputs = json::object();
  for (const auto& [name, digest] : context.input_digests) inputs[name] = digest;
  return json{{"tool_version", kToolVersion}, {"seed", context.seed}, {"inputs", inputs}};
}

json report_to_json(const InequalityReport& r) {
  json j = {
      {"lemma", lemma_name(r.lemma_id)}, {"lhs", r.lhs},   {"rhs", r.rhs},
      {"ratio", r.ratio},                {"pass", r.pass},
  };
  if (r.order_m >= 0) j["m"] = r.order_m;
  if (r.order_k >= 0) j["k"] = r.order_k;
  if (r.index_n >= 0) j["n"] = r.index_n;
  if (!r.aux.empty()) {
    json aux = json::object();
    for (const auto& [key, value] : r.aux) aux[key] = value;
    j["aux"] = aux;
  }
  return j;
}

json entry_to_json(const BoundEntry& e) {
  return json{{"rhs", e.rhs},
              {"measured", e.measured},
              {"pass", e.pass},
              {"overestimation", e.overestimation}};
}

json entries_to_json(const std::map<int, BoundEntry>& entries) {
  json j = json::object();
  for (const auto& [m, entry] : entries) j[std::to_string(m)] = entry_to_json(entry);
  return j;
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string digest_hex(std::uint64_t digest) {
  char buffer[20];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(digest));
  return buffer;
}

std::string digest_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NumericFailure("digest_file: cannot open " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return digest_hex(fnv1a64(content.data(), content.size()));
}

void write_constants_report(const fs::path& path, int mmax, const std::vector<DhatSeed>& seeds,
                            const ReportContext& context) {
  const BaseConstants base = base_constants();
  json j = envelope(context);
  j["schema"] = "podkit-constants-v1";
  j["base"] = {{"c_A", base.c_a}, {"c_A1", base.c_a1}, {"c_B1", base.c_b1}};

  json per_seed = json::object();
  for (DhatSeed seed : seeds) {
    ConstantsTable table(seed);
    json c_m = json::object();
    for (int m = 1; m <= mmax; ++m) {
      double log_value = table.log_c_m(m);
      json row = {{"log", log_value}};
      if (log_value <= 700.0) row["value"] = std::exp(log_value);
      c_m[std::to_string(m)] = row;
    }
    CmComparison cmp = compare_c_m_with_reported(table);
    json anchors = json::array();
    for (const auto& row : cmp.rows) {
      anchors.push_back({{"m", row.m},
                         {"log_recursion", row.log_recursion},
                         {"reported", row.reported},
                         {"relative_deviation", row.relative_deviation}});
    }
    per_seed[dhat_seed_name(seed)] = {
        {"c_m", c_m},
        {"reported_comparison", anchors},
        {"max_relative_deviation", cmp.max_relative_deviation},
        {"reproduces_reported_table", cmp.matches(0.005)},
    };
  }
  j["seeds"] = per_seed;

  json reported = json::array();
  for (const auto& [m, value] : c_m_reported_anchors())
    reported.push_back({{"m", m}, {"c_m", value}});
  j["reported_anchors"] = reported;

  write_text(path, j.dump(2) + "\n");
}

void write_inequality_batch(const fs::path& path, const std::vector<InequalityReport>& reports,
                            const ReportContext& context) {
  json j = envelope(context);
  j["schema"] = "podkit-inequality-batch-v1";
  int violations = 0;
  json items = json::array();
  for (const auto& r : reports) {
    if (!r.pass) ++violations;
    items.push_back(report_to_json(r));
  }
  j["count"] = reports.size();
  j["violations"] = violations;
  j["reports"] = items;
  write_text(path, j.dump(2) + "\n");
}

void write_bound_report(const fs::path& path, const BoundReport& report,
                        const ReportContext& context) {
  json j = envelope(context);
  j["schema"] = "podkit-bound-report-v1";
  j["config"] = {{"gram", report.gram_kind},   {"r", report.rank},
                 {"M", report.intervals},      {"T", report.duration},
                 {"periodic", report.periodic}, {"zero_mean", report.zero_mean},
                 {"source_count", report.source_count},
                 {"cm_source", report.cm_source}, {"cm_seed", report.cm_seed}};
  j["tails"] = {{"sigma_tail", report.sigma_tail},
                {"gamma_r", report.gamma_r},
                {"cross_tail", report.cross_tail},
                {"cross_gamma_r", report.cross_gamma_r}};
  json measured = {{"max_pointwise_error", report.max_pointwise_error},
                   {"max_pointwise_error_l2", report.max_pointwise_error_l2},
                   {"dq_error_x", report.dq_error_x},
                   {"dq_error_l2", report.dq_error_l2}};
  if (report.rom_max_error_euler >= 0.0) measured["rom_max_error_euler"] = report.rom_max_error_euler;
  if (report.rom_max_error_bdf2 >= 0.0) measured["rom_max_error_bdf2"] = report.rom_max_error_bdf2;
  j["measured"] = measured;
  if (report.poincare > 0.0) j["poincare"] = report.poincare;

  json cm = json::object();
  for (const auto& [m, value] : report.cm_values) cm[std::to_string(m)] = value;
  j["c_m"] = cm;

  j["bounds"] = {{"thm1", entry_to_json(report.thm1)},
                 {"degraded_baseline", entry_to_json(report.degraded_baseline)},
                 {"thm2", entries_to_json(report.thm2)},
                 {"thm3", entries_to_json(report.thm3)},
                 {"esti1", entries_to_json(report.esti1)},
                 {"esti2", entries_to_json(report.esti2)},
                 {"diferente1", entries_to_json(report.diferente1)},
                 {"diferente2", entries_to_json(report.diferente2)},
                 {"rho", entries_to_json(report.rho)},
                 {"mu", entries_to_json(report.mu)},
                 {"thm_heat_euler", entries_to_json(report.thm_heat_euler)},
                 {"thm_heat_bdf2", entries_to_json(report.thm_heat_bdf2)}};
  j["all_pass"] = report.all_pass();
  write_text(path, j.dump(2) + "\n");
}

void write_csv(const fs::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::string text;
  for (std::size_t i = 0; i < header.size(); ++i) {
    text += header[i];
    text += (i + 1 < header.size()) ? ',' : '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      text += format_double(row[i]);
      text += (i + 1 < row.size()) ? ',' : '\n';
    }
  }
  write_text(path, text);
}

void write_plot_series(PlotKind kind, const fs::path& path,
                       const std::vector<std::pair<double, double>>& points) {
  std::vector<std::string> header;
  switch (kind) {
    case PlotKind::deriv_norms: header = {"t", "derivative_norm"}; break;
    case PlotKind::mode_norms: header = {"mode", "norm"}; break;
    case PlotKind::sigma_tail: header = {"r", "gamma_r"}; break;
    case PlotKind::error_vs_r: header = {"r", "max_error"}; break;
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& [x, y] : points) rows.push_back({x, y});
  write_csv(path, header, rows);
}

std::vector<std::pair<double, double>> deriv_norm_series(const DerivativeSampler& u,
                                                         const HilbertSpace& space,
                                                         double duration, int order,
                                                         int samples) {
  if (samples < 2) throw InvalidArgument("deriv_norm_series: need at least 2 samples");
  std::vector<std::pair<double, double>> points(samples);
  const double h = duration / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double t = i * h;
    points[i] = {t, space.norm(u(t, order))};
  }
  return points;
}

std::vector<std::pair<double, double>> mode_norm_series(const PodBasis& basis,
                                                        const HilbertSpace& other) {
  Eigen::VectorXd norms = mode_norms(basis, other);
  std::vector<std::pair<double, double>> points(norms.size());
  for (int k = 0; k < norms.size(); ++k) points[k] = {static_cast<double>(k + 1), norms(k)};
  return points;
}

std::vector<std::pair<double, double>> sigma_tail_series(const PodBasis& basis) {
  std::vector<std::pair<double, double>> points(basis.rank + 1);
  for (int r = 0; r <= basis.rank; ++r)
    points[r] = {static_cast<double>(r), std::sqrt(basis.sigma_tail(r))};
  return points;
}

std::vector<std::pair<double, double>> error_vs_r_series(const PodBasis& basis,
                                                         const Trajectory& trajectory,
                                                         const HilbertSpace& measure) {
  std::vector<std::pair<double, double>> points(basis.rank + 1);
  for (int r = 0; r <= basis.rank; ++r) {
    ProjectionErrorSeries series = projection_error_series(basis, r, trajectory, measure);
    points[r] = {static_cast<double>(r), series.max_error};
  }
  return points;
}

}  // namespace podkit
