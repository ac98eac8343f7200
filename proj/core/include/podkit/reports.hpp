#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "podkit/bounds.hpp"
#include "podkit/constants.hpp"
#include "podkit/inequality_report.hpp"
#include "podkit/pod.hpp"
#include "podkit/seq_norms.hpp"

namespace podkit {

/// FNV-1a 64-bit digest, used to stamp reports with their input identities.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string digest_hex(std::uint64_t digest);
std::string digest_file(const std::filesystem::path& path);

/// Report envelope shared by every JSON emitter: seed, tool version and the
/// digests of whatever inputs produced the payload.
struct ReportContext {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;
};

void write_constants_report(const std::filesystem::path& path, int mmax,
                            const std::vector<DhatSeed>& seeds, const ReportContext& context);

void write_inequality_batch(const std::filesystem::path& path,
                            const std::vector<InequalityReport>& reports,
                            const ReportContext& context);

void write_bound_report(const std::filesystem::path& path, const BoundReport& report,
                        const ReportContext& context);

/// Two-column CSV with a per-kind header; %.17g columns, one row per point.
enum class PlotKind { deriv_norms, mode_norms, sigma_tail, error_vs_r };

void write_plot_series(PlotKind kind, const std::filesystem::path& path,
                       const std::vector<std::pair<double, double>>& points);

std::vector<std::pair<double, double>> deriv_norm_series(const DerivativeSampler& u,
                                                         const HilbertSpace& space,
                                                         double duration, int order,
                                                         int samples);
std::vector<std::pair<double, double>> mode_norm_series(const PodBasis& basis,
                                                        const HilbertSpace& other);
std::vector<std::pair<double, double>> sigma_tail_series(const PodBasis& basis);
std::vector<std::pair<double, double>> error_vs_r_series(const PodBasis& basis,
                                                         const Trajectory& trajectory,
                                                         const HilbertSpace& measure);

/// Generic CSV writer: header row then %.17g-formatted numeric rows.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace podkit
