#include "waudit/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts are unsupported");
static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

namespace waudit {

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

std::vector<char> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  in.seekg(0, std::ios::end);
  const auto len = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<char> buf(len);
  if (len > 0) in.read(buf.data(), static_cast<std::streamsize>(len));
  if (!in) throw Error("read failed: " + path.string());
  return buf;
}

void write_all(const std::filesystem::path& path, const void* data, std::size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open file for writing: " + path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  if (!out) throw Error("write failed: " + path.string());
}

std::uint32_t read_u32(const char* p) {
  std::uint32_t v;
  std::memcpy(&v, p, 4);
  return v;
}

}  // namespace

CheckpointSet load_checkpoint_set(const std::filesystem::path& manifest_path) {
  nlohmann::json j;
  {
    std::ifstream in(manifest_path);
    if (!in) throw Error("cannot open manifest: " + manifest_path.string());
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error("manifest is not valid JSON: " + manifest_path.string() + ": " + e.what());
    }
  }
  if (!j.is_object() || !j.contains("arch") || !j.contains("role") || !j.contains("members"))
    throw Error("manifest missing arch/role/members: " + manifest_path.string());

  CheckpointSet set;
  for (const auto& l : j.at("arch")) {
    LayerSpec spec;
    spec.in_dim = l.at("in").get<int>();
    spec.out_dim = l.at("out").get<int>();
    spec.act = activation_from_name(l.at("act").get<std::string>());
    set.arch.push_back(spec);
  }
  validate_arch(set.arch);
  set.role = role_from_name(j.at("role").get<std::string>());
  if (j.contains("provenance")) set.provenance = j.at("provenance");

  const auto dir = manifest_path.parent_path();
  const std::size_t n_params = param_count(set.arch);
  const std::size_t want_bytes = n_params * sizeof(float);

  for (const auto& m : j.at("members")) {
    const auto id = m.at("id").get<std::string>();
    const auto file = dir / m.at("file").get<std::string>();
    if (!std::filesystem::exists(file))
      throw Error("member \"" + id + "\": missing file " + file.string());
    const auto bytes = read_all(file);
    if (bytes.size() != want_bytes)
      throw Error(fmt("member \"%s\": byte length mismatch in %s (expected %zu bytes for "
                      "%zu f32 parameters, got %zu)",
                      id.c_str(), file.string().c_str(), want_bytes, n_params, bytes.size()));
    std::vector<float> flat(n_params);
    std::memcpy(flat.data(), bytes.data(), want_bytes);
    for (std::size_t i = 0; i < flat.size(); ++i)
      if (!std::isfinite(flat[i]))
        throw Error(fmt("member \"%s\": non-finite value at flat index %zu", id.c_str(), i));
    set.members.push_back(Network::unflatten(id, set.arch, flat));
  }
  validate_set(set);
  return set;
}

void save_checkpoint_set(const CheckpointSet& set, const std::filesystem::path& dir) {
  validate_set(set);
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["arch"] = nlohmann::json::array();
  for (const auto& l : set.arch)
    j["arch"].push_back({{"in", l.in_dim}, {"out", l.out_dim}, {"act", activation_name(l.act)}});
  j["role"] = role_name(set.role);
  j["members"] = nlohmann::json::array();
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    const auto file = fmt("m%04zu.bin", i);
    j["members"].push_back({{"id", set.members[i].id()}, {"file", file}});
    const auto flat = set.members[i].flatten();
    write_all(dir / file, flat.data(), flat.size() * sizeof(float));
  }
  if (!set.provenance.is_null()) j["provenance"] = set.provenance;
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write manifest in " + dir.string());
  out << j.dump(2) << "\n";
}

LabeledDataset load_dataset(const std::filesystem::path& path) {
  const auto buf = read_all(path);
  if (buf.size() < 16 || std::memcmp(buf.data(), "DSET", 4) != 0)
    throw Error("bad magic in dataset file " + path.string() + " (expected DSET)");
  LabeledDataset data;
  data.n = static_cast<int>(read_u32(buf.data() + 4));
  data.dim = static_cast<int>(read_u32(buf.data() + 8));
  data.n_classes = static_cast<int>(read_u32(buf.data() + 12));
  if (data.n < 1 || data.dim < 1 || data.n_classes < 1)
    throw Error("dataset header has non-positive counts: " + path.string());
  const std::size_t nf = static_cast<std::size_t>(data.n) * data.dim;
  const std::size_t want = 16 + nf * 4 + static_cast<std::size_t>(data.n) * 4;
  if (buf.size() != want)
    throw Error(fmt("truncated dataset %s (expected %zu bytes, got %zu)",
                    path.string().c_str(), want, buf.size()));
  data.features.resize(nf);
  std::memcpy(data.features.data(), buf.data() + 16, nf * 4);
  data.labels.resize(data.n);
  for (int i = 0; i < data.n; ++i) {
    const auto raw = read_u32(buf.data() + 16 + nf * 4 + static_cast<std::size_t>(i) * 4);
    if (raw >= static_cast<std::uint32_t>(data.n_classes))
      throw Error(fmt("label %u out of range (n_classes=%d) at row %d in %s", raw,
                      data.n_classes, i, path.string().c_str()));
    data.labels[i] = static_cast<int>(raw);
  }
  validate_dataset(data);
  return data;
}

void save_dataset(const LabeledDataset& data, const std::filesystem::path& path) {
  validate_dataset(data);
  std::vector<char> buf;
  const std::size_t nf = data.features.size();
  buf.resize(16 + nf * 4 + static_cast<std::size_t>(data.n) * 4);
  std::memcpy(buf.data(), "DSET", 4);
  const std::uint32_t hdr[3] = {static_cast<std::uint32_t>(data.n),
                                static_cast<std::uint32_t>(data.dim),
                                static_cast<std::uint32_t>(data.n_classes)};
  std::memcpy(buf.data() + 4, hdr, 12);
  std::memcpy(buf.data() + 16, data.features.data(), nf * 4);
  for (int i = 0; i < data.n; ++i) {
    const auto v = static_cast<std::uint32_t>(data.labels[i]);
    std::memcpy(buf.data() + 16 + nf * 4 + static_cast<std::size_t>(i) * 4, &v, 4);
  }
  write_all(path, buf.data(), buf.size());
}

PointCloud load_point_cloud(const std::filesystem::path& path) {
  const auto buf = read_all(path);
  if (buf.size() < 8 || std::memcmp(buf.data(), "PC3D", 4) != 0)
    throw Error("bad magic in point cloud file " + path.string() + " (expected PC3D)");
  const auto m = read_u32(buf.data() + 4);
  if (m == 0) throw Error("point cloud is empty: " + path.string());
  const std::size_t want = 8 + static_cast<std::size_t>(m) * 12;
  if (buf.size() != want)
    throw Error(fmt("point cloud %s truncated at byte offset %zu (expected %zu bytes for "
                    "%u points)",
                    path.string().c_str(), buf.size(), want, m));
  PointCloud cloud;
  cloud.pts.resize(static_cast<std::size_t>(m) * 3);
  std::memcpy(cloud.pts.data(), buf.data() + 8, cloud.pts.size() * 4);
  for (std::size_t i = 0; i < cloud.pts.size(); ++i)
    if (!std::isfinite(cloud.pts[i]))
      throw Error(fmt("non-finite coordinate at flat index %zu in %s", i,
                      path.string().c_str()));
  return cloud;
}

void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path) {
  if (cloud.size() == 0) throw Error("refusing to write empty point cloud");
  std::vector<char> buf(8 + cloud.pts.size() * 4);
  std::memcpy(buf.data(), "PC3D", 4);
  const auto m = static_cast<std::uint32_t>(cloud.size());
  std::memcpy(buf.data() + 4, &m, 4);
  std::memcpy(buf.data() + 8, cloud.pts.data(), cloud.pts.size() * 4);
  write_all(path, buf.data(), buf.size());
}

}  // namespace waudit
