#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace audigit {

enum class DatasetLayout {
  Fsdd,           // flat files named <digit>_<speaker>_<index>.wav
  FolderPerClass  // <root>/<class-index>/<anything>.wav
};

struct ManifestEntry {
  std::filesystem::path path;
  int label = -1;
  std::string speaker_id;  // only populated by the Fsdd layout
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;  // sorted lexicographically by path
  int class_count = 10;
  std::filesystem::path root;
};

struct SplitSpec {
  double test_fraction = 0.2;
  double val_fraction_of_train = 0.1;
  std::uint64_t seed = 0;
  bool stratified = false;
};

struct DatasetSplit {
  DatasetManifest train;
  DatasetManifest val;
  DatasetManifest test;
};

// Walks root for .wav files and derives labels from the layout. Entries come
// back sorted by path so two loads of the same tree are identical.
DatasetManifest load_dataset(const std::filesystem::path& root,
                             DatasetLayout layout);

// Disjoint partition covering every entry. |test| = round(tf * N) and
// |val| = round(vf * (N - |test|)); the same seed always yields the same
// partition. Stratified mode applies the same rounding per class.
DatasetSplit split_dataset(const DatasetManifest& manifest,
                           const SplitSpec& spec);

}  // namespace audigit
