#include "podkit/constants.hpp"

#include <cmath>
#include <limits>

#include "podkit/errors.hpp"

namespace podkit {

namespace {

constexpr double kLogDoubleMax = 709.0;

double checked_exp(double log_value, const char* what) {
  if (log_value > kLogDoubleMax)
    throw NumericFailure(std::string(what) + ": value overflows double, use the log accessor");
  return std::exp(log_value);
}

// log(1 + e^t), stable for large |t|.
double log1p_exp(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace

BaseConstants base_constants() {
  BaseConstants b;
  b.c_a = std::sqrt(2.0 + std::sqrt(2.0) / 2.0);
  b.c_a1 = std::pow(1.0 + std::pow(std::sqrt(2.0) * b.c_a, 4.0 / 3.0), 3.0 / 4.0);
  b.c_b1 = 2.0 * std::sqrt(1.0 + 2.0 * (b.c_a * b.c_a1) * (b.c_a * b.c_a1));
  return b;
}

double dhat_seed_value(DhatSeed seed) {
  const BaseConstants b = base_constants();
  switch (seed) {
    case DhatSeed::c_b1: return b.c_b1;
    case DhatSeed::c_b1_over_sqrt2: return b.c_b1 / std::sqrt(2.0);
    case DhatSeed::unit: return 1.0;
  }
  throw InvalidArgument("unknown d-hat seed");
}

const char* dhat_seed_name(DhatSeed seed) {
  switch (seed) {
    case DhatSeed::c_b1: return "cb1";
    case DhatSeed::c_b1_over_sqrt2: return "cb1-sqrt2";
    case DhatSeed::unit: return "unit";
  }
  return "unknown";
}

DhatSeed dhat_seed_from_name(const std::string& name) {
  if (name == "cb1") return DhatSeed::c_b1;
  if (name == "cb1-sqrt2") return DhatSeed::c_b1_over_sqrt2;
  if (name == "unit") return DhatSeed::unit;
  throw InvalidArgument("unknown d-hat seed name: " + name);
}

ConstantsTable::ConstantsTable(DhatSeed seed) : seed_(seed), base_(base_constants()) {
  log_c_.push_back(std::log(base_.c_b1 / std::sqrt(2.0)));
  log_d_.push_back(std::log(dhat_seed_value(seed_)));
  prefix_c_.push_back(log_c_[0]);
  prefix_d_.push_back(log_d_[0]);
}

void ConstantsTable::extend(int jmax) const {
  for (int j = static_cast<int>(log_c_.size()); j <= jmax; ++j) {
    const double bracket = log1p_exp(2.0 * (j + 1) * log_d_[j - 1]);
    const double e_bracket = (j + 1.0) / (2.0 * (j + 2.0) * j);
    const double e_product = (j + 1.0) / ((j + 2.0) * j);
    log_c_.push_back(e_bracket * bracket + e_product * prefix_c_[j - 1]);
    log_d_.push_back(e_bracket * bracket + e_product * prefix_d_[j - 1]);
    prefix_c_.push_back(prefix_c_[j - 1] + log_c_[j] / (j + 1.0));
    prefix_d_.push_back(prefix_d_[j - 1] + log_d_[j] / (j + 1.0));
  }
}

double ConstantsTable::log_hat_c(int j) const {
  if (j < 0) throw InvalidArgument("hat_c: index must be nonnegative");
  std::lock_guard<std::mutex> lock(mutex_);
  extend(j);
  return log_c_[j];
}

double ConstantsTable::log_hat_d(int j) const {
  if (j < 0) throw InvalidArgument("hat_d: index must be nonnegative");
  std::lock_guard<std::mutex> lock(mutex_);
  extend(j);
  return log_d_[j];
}

double ConstantsTable::hat_c(int j) const { return checked_exp(log_hat_c(j), "hat_c"); }
double ConstantsTable::hat_d(int j) const { return checked_exp(log_hat_d(j), "hat_d"); }

double ConstantsTable::log_c_m(int m) const {
  if (m < 1) throw InvalidArgument("c_m: m must be at least 1");
  if (m == 1) return 0.0;
  std::lock_guard<std::mutex> lock(mutex_);
  extend(m - 2);
  return prefix_c_[m - 2];
}

double ConstantsTable::c_m(int m) const { return checked_exp(log_c_m(m), "c_m"); }

std::pair<std::vector<double>, std::vector<double>> hat_sequences(int jmax, DhatSeed seed) {
  if (jmax < 0) throw InvalidArgument("hat_sequences: jmax must be nonnegative");
  ConstantsTable table(seed);
  std::vector<double> c(jmax + 1), d(jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    c[j] = table.hat_c(j);
    d[j] = table.hat_d(j);
  }
  return {std::move(c), std::move(d)};
}

const std::vector<std::pair<int, double>>& c_m_reported_anchors() {
  static const std::vector<std::pair<int, double>> anchors = {
      {1, 1.0},      {2, 9.558},    {3, 33.17},    {4, 67.26},     {5, 103.7},
      {6, 137.7},    {7, 167.5},    {8, 193.0},    {9, 214.7},     {10, 233.4},
      {100, 432.7},  {1000, 458.5}, {10000, 461.1}, {100000, 461.4}};
  return anchors;
}

double c_m_reported(int m) {
  if (m < 1) throw InvalidArgument("c_m_reported: m must be at least 1");
  const auto& anchors = c_m_reported_anchors();
  if (m >= anchors.back().first) return anchors.back().second;
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    if (m == anchors[i].first) return anchors[i].second;
    if (m > anchors[i].first && m < anchors[i + 1].first) {
      // Monotone interpolation in log m between the surrounding anchors.
      const double x0 = std::log(static_cast<double>(anchors[i].first));
      const double x1 = std::log(static_cast<double>(anchors[i + 1].first));
      const double w = (std::log(static_cast<double>(m)) - x0) / (x1 - x0);
      return anchors[i].second + w * (anchors[i + 1].second - anchors[i].second);
    }
  }
  return anchors.back().second;
}

const char* cm_source_name(CmSource source) {
  switch (source) {
    case CmSource::recursion: return "recursion";
    case CmSource::reported_table: return "reported-table";
  }
  return "unknown";
}

double c_m_value(int m, CmSource source, const ConstantsTable& table) {
  if (source == CmSource::reported_table) return c_m_reported(m);
  return table.c_m(m);
}

CmComparison compare_c_m_with_reported(const ConstantsTable& table) {
  CmComparison cmp;
  cmp.seed = table.seed();
  cmp.max_relative_deviation = 0.0;
  for (const auto& [m, reported] : c_m_reported_anchors()) {
    CmComparisonRow row;
    row.m = m;
    row.log_recursion = table.log_c_m(m);
    row.reported = reported;
    if (row.log_recursion > kLogDoubleMax) {
      row.relative_deviation = std::numeric_limits<double>::infinity();
    } else {
      row.relative_deviation = std::abs(std::exp(row.log_recursion) - reported) / reported;
    }
    cmp.max_relative_deviation = std::max(cmp.max_relative_deviation, row.relative_deviation);
    cmp.rows.push_back(row);
  }
  return cmp;
}

}  // namespace podkit
