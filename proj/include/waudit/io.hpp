#pragma once

#include <filesystem>

#include "waudit/types.hpp"

namespace waudit {

// Checkpoint manifest: JSON with fields
//   arch:    [{in, out, act}, ...]       act in tanh|relu|identity
//   role:    training|generated|baseline
//   members: [{id, file}, ...]           file relative to the manifest
//   provenance: optional object, carried verbatim
// Each member file is raw little-endian f32: layers in order, weight matrix
// row-major then bias vector. No header; the byte length is fixed by arch.
CheckpointSet load_checkpoint_set(const std::filesystem::path& manifest_path);

// Writes dir/manifest.json plus one m%04zu.bin per member.
void save_checkpoint_set(const CheckpointSet& set, const std::filesystem::path& dir);

// DSET: magic "DSET", u32 LE n, d, n_classes, n*d f32 LE features row-major,
// n u32 LE labels.
LabeledDataset load_dataset(const std::filesystem::path& path);
void save_dataset(const LabeledDataset& data, const std::filesystem::path& path);

// PC3D: magic "PC3D", u32 LE m, m*3 f32 LE coordinates.
PointCloud load_point_cloud(const std::filesystem::path& path);
void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path);

}  // namespace waudit
