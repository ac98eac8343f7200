#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "podkit/pod.hpp"
#include "podkit/trajectory.hpp"

namespace podkit {

/// On-disk snapshot set: meta.json sidecar plus a raw little-endian float64
/// payload (data.f64le, snapshot-contiguous) and, for non-Euclidean spaces,
/// the Gram operator as a dense row-major square block (gram.f64le).
struct SnapshotContainerMeta {
  std::string schema = "podkit-snapshots-v1";
  int n_dofs = 0;
  int intervals = 0;
  double duration = 0.0;
  bool periodic = false;
  std::string gram_kind = "identity";
  std::optional<std::string> gram_file;
  bool mean_subtracted = false;
  std::string byte_order = "little";
  std::string layout = "time-major";
  std::string generator_json;  // serialized free-form provenance block
};

void write_snapshot_container(const std::filesystem::path& dir, const Trajectory& trajectory,
                              bool mean_subtracted = false,
                              const std::string& generator_json = "");

struct LoadedSnapshots {
  SnapshotContainerMeta meta;
  Trajectory trajectory;
};

LoadedSnapshots read_snapshot_container(const std::filesystem::path& dir);

/// POD basis container: meta.json carries the singular values and weights,
/// data.f64le the modes (mode-contiguous), gram.f64le the Gram operator the
/// basis is orthonormal under, mean.f64le the subtracted mean if any.
void write_basis_container(const std::filesystem::path& dir, const PodBasis& basis);

PodBasis read_basis_container(const std::filesystem::path& dir);

}  // namespace podkit
