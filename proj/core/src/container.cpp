#include "podkit/container.hpp"

#include <bit>
#include <fstream>

#include <nlohmann/json.hpp>

#include "podkit/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "container payloads are little-endian; byte-swapped platforms are unsupported");

namespace podkit {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_bytes(const fs::path& path, const double* data, std::size_t count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw NumericFailure("container: cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * 8));
  if (!out) throw NumericFailure("container: short write to " + path.string());
}

std::vector<double> read_bytes(const fs::path& path, std::size_t expected_count) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw NumericFailure("container: cannot open " + path.string());
  const auto size = static_cast<std::size_t>(in.tellg());
  if (size != expected_count * 8)
    throw NumericFailure("container: " + path.string() + " has unexpected payload length");
  std::vector<double> data(expected_count);
  in.seekg(0);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(size));
  if (!in) throw NumericFailure("container: short read from " + path.string());
  return data;
}

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw NumericFailure("container: cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw NumericFailure("container: cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

// Dense row-major dump of a sparse operator.
std::vector<double> densify(const Eigen::SparseMatrix<double>& m) {
  Eigen::MatrixXd dense(m);
  std::vector<double> out(static_cast<std::size_t>(dense.rows()) * dense.cols());
  for (Eigen::Index i = 0; i < dense.rows(); ++i)
    for (Eigen::Index j = 0; j < dense.cols(); ++j)
      out[static_cast<std::size_t>(i) * dense.cols() + j] = dense(i, j);
  return out;
}

Eigen::SparseMatrix<double> sparsify(const std::vector<double>& data, int n) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = data[static_cast<std::size_t>(i) * n + j];
      if (v != 0.0) triplets.emplace_back(i, j, v);
    }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

}  // namespace

void write_snapshot_container(const fs::path& dir, const Trajectory& trajectory,
                              bool mean_subtracted, const std::string& generator_json) {
  fs::create_directories(dir);
  const int n = trajectory.space().dim();
  const int cols = trajectory.snapshot_count();

  // Snapshot-contiguous payload.
  std::vector<double> payload(static_cast<std::size_t>(n) * cols);
  for (int c = 0; c < cols; ++c)
    for (int i = 0; i < n; ++i)
      payload[static_cast<std::size_t>(c) * n + i] = trajectory.values()(i, c);
  write_bytes(dir / "data.f64le", payload.data(), payload.size());

  json gram = {{"kind", gram_kind_name(trajectory.space().kind())}};
  if (!trajectory.space().is_identity()) {
    std::vector<double> g = densify(trajectory.space().gram());
    write_bytes(dir / "gram.f64le", g.data(), g.size());
    gram["file"] = "gram.f64le";
  }

  json meta = {
      {"schema", "podkit-snapshots-v1"},
      {"N", n},
      {"M", trajectory.grid().intervals()},
      {"T", trajectory.grid().duration()},
      {"periodic", trajectory.periodic()},
      {"gram", gram},
      {"mean_subtracted", mean_subtracted},
      {"byte_order", "little"},
      {"layout", "time-major"},
  };
  if (!generator_json.empty()) meta["generator"] = json::parse(generator_json);
  write_json_file(dir / "meta.json", meta);
}

LoadedSnapshots read_snapshot_container(const fs::path& dir) {
  const json meta = read_json_file(dir / "meta.json");
  if (meta.at("schema").get<std::string>() != "podkit-snapshots-v1")
    throw InvalidArgument("read_snapshot_container: unexpected schema");

  SnapshotContainerMeta out;
  out.n_dofs = meta.at("N").get<int>();
  out.intervals = meta.at("M").get<int>();
  out.duration = meta.at("T").get<double>();
  out.periodic = meta.at("periodic").get<bool>();
  out.mean_subtracted = meta.at("mean_subtracted").get<bool>();
  out.gram_kind = meta.at("gram").at("kind").get<std::string>();
  if (meta.at("gram").contains("file"))
    out.gram_file = meta.at("gram").at("file").get<std::string>();
  if (meta.contains("generator")) out.generator_json = meta.at("generator").dump();

  std::shared_ptr<const HilbertSpace> space;
  if (out.gram_file) {
    std::vector<double> g =
        read_bytes(dir / *out.gram_file, static_cast<std::size_t>(out.n_dofs) * out.n_dofs);
    space = make_space(gram_kind_from_name(out.gram_kind), sparsify(g, out.n_dofs));
  } else {
    space = make_euclidean_space(out.n_dofs);
  }

  const int cols = out.intervals + 1;
  std::vector<double> payload =
      read_bytes(dir / "data.f64le", static_cast<std::size_t>(out.n_dofs) * cols);
  Eigen::MatrixXd values(out.n_dofs, cols);
  for (int c = 0; c < cols; ++c)
    for (int i = 0; i < out.n_dofs; ++i)
      values(i, c) = payload[static_cast<std::size_t>(c) * out.n_dofs + i];

  Trajectory traj(TimeGrid(out.duration, out.intervals), std::move(space), std::move(values),
                  out.periodic);
  return {std::move(out), std::move(traj)};
}

void write_basis_container(const fs::path& dir, const PodBasis& basis) {
  fs::create_directories(dir);
  const int n = basis.space->dim();

  std::vector<double> payload(static_cast<std::size_t>(n) * basis.rank);
  for (int k = 0; k < basis.rank; ++k)
    for (int i = 0; i < n; ++i)
      payload[static_cast<std::size_t>(k) * n + i] = basis.modes(i, k);
  write_bytes(dir / "data.f64le", payload.data(), payload.size());

  json gram = {{"kind", gram_kind_name(basis.space->kind())}};
  if (!basis.space->is_identity()) {
    std::vector<double> g = densify(basis.space->gram());
    write_bytes(dir / "gram.f64le", g.data(), g.size());
    gram["file"] = "gram.f64le";
  }

  json sigma = json::array();
  for (int k = 0; k < basis.rank; ++k) sigma.push_back(basis.sigma(k));

  json meta = {
      {"schema", "podkit-basis-v1"},
      {"N", n},
      {"J", basis.rank},
      {"sigma", sigma},
      {"weight", basis.weight},
      {"source_count", basis.source_count},
      {"first_snapshot", basis.first_snapshot},
      {"drop_first", basis.drop_first},
      {"mean_subtracted", basis.mean_subtracted},
      {"gram", gram},
      {"byte_order", "little"},
      {"layout", "mode-major"},
  };
  if (basis.mean_subtracted) {
    write_bytes(dir / "mean.f64le", basis.mean.data(), static_cast<std::size_t>(n));
    meta["mean_file"] = "mean.f64le";
  }
  write_json_file(dir / "meta.json", meta);
}

PodBasis read_basis_container(const fs::path& dir) {
  const json meta = read_json_file(dir / "meta.json");
  if (meta.at("schema").get<std::string>() != "podkit-basis-v1")
    throw InvalidArgument("read_basis_container: unexpected schema");

  PodBasis basis;
  const int n = meta.at("N").get<int>();
  basis.rank = meta.at("J").get<int>();
  basis.weight = meta.at("weight").get<double>();
  basis.source_count = meta.at("source_count").get<int>();
  basis.first_snapshot = meta.at("first_snapshot").get<int>();
  basis.drop_first = meta.at("drop_first").get<bool>();
  basis.mean_subtracted = meta.at("mean_subtracted").get<bool>();

  const std::string kind = meta.at("gram").at("kind").get<std::string>();
  if (meta.at("gram").contains("file")) {
    std::vector<double> g = read_bytes(dir / meta.at("gram").at("file").get<std::string>(),
                                       static_cast<std::size_t>(n) * n);
    basis.space = make_space(gram_kind_from_name(kind), sparsify(g, n));
  } else {
    basis.space = make_euclidean_space(n);
  }

  basis.sigma.resize(basis.rank);
  const json& sigma = meta.at("sigma");
  for (int k = 0; k < basis.rank; ++k) basis.sigma(k) = sigma.at(k).get<double>();

  std::vector<double> payload =
      read_bytes(dir / "data.f64le", static_cast<std::size_t>(n) * basis.rank);
  basis.modes.resize(n, basis.rank);
  for (int k = 0; k < basis.rank; ++k)
    for (int i = 0; i < n; ++i) basis.modes(i, k) = payload[static_cast<std::size_t>(k) * n + i];

  if (basis.mean_subtracted) {
    std::vector<double> mean =
        read_bytes(dir / meta.at("mean_file").get<std::string>(), static_cast<std::size_t>(n));
    basis.mean = Eigen::Map<Eigen::VectorXd>(mean.data(), n);
  }
  return basis;
}

}  // namespace podkit
