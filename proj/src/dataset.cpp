#include "audigit/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "audigit/errors.hpp"
#include "audigit/rng.hpp"

namespace audigit {

namespace {

bool has_wav_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".wav";
}

int parse_class_index(const std::string& text, int class_count,
                      const std::filesystem::path& context) {
  int value = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 ||
      value >= class_count) {
    throw UnlabeledFile("'" + text + "' is not a class index for " +
                        context.string());
  }
  return value;
}

ManifestEntry entry_for(const std::filesystem::path& file, DatasetLayout layout,
                        int class_count) {
  ManifestEntry entry;
  entry.path = file;
  if (layout == DatasetLayout::Fsdd) {
    // <digit>_<speaker>_<index>.wav
    const std::string stem = file.stem().string();
    const auto first = stem.find('_');
    const auto last = stem.rfind('_');
    if (first == std::string::npos || last == first) {
      throw UnlabeledFile("filename does not match digit_speaker_index: " +
                          file.string());
    }
    entry.label = parse_class_index(stem.substr(0, first), class_count, file);
    entry.speaker_id = stem.substr(first + 1, last - first - 1);
  } else {
    entry.label = parse_class_index(file.parent_path().filename().string(),
                                    class_count, file);
  }
  return entry;
}

// llround, i.e. round half away from zero
std::size_t round_count(double x) {
  return static_cast<std::size_t>(std::llround(x));
}

DatasetManifest subset(const DatasetManifest& manifest,
                       std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  DatasetManifest out;
  out.class_count = manifest.class_count;
  out.root = manifest.root;
  out.entries.reserve(indices.size());
  for (std::size_t i : indices) out.entries.push_back(manifest.entries[i]);
  return out;
}

}  // namespace

DatasetManifest load_dataset(const std::filesystem::path& root,
                             DatasetLayout layout) {
  if (!std::filesystem::exists(root)) {
    throw EmptyDataset("dataset root does not exist: " + root.string());
  }

  DatasetManifest manifest;
  manifest.root = root;
  for (const auto& it : std::filesystem::recursive_directory_iterator(root)) {
    if (!it.is_regular_file() || !has_wav_extension(it.path())) continue;
    manifest.entries.push_back(entry_for(it.path(), layout, manifest.class_count));
  }
  if (manifest.entries.empty()) {
    throw EmptyDataset("no .wav files under " + root.string());
  }

  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.path.generic_string() < b.path.generic_string();
            });
  return manifest;
}

DatasetSplit split_dataset(const DatasetManifest& manifest,
                           const SplitSpec& spec) {
  if (manifest.entries.empty()) throw EmptyDataset("cannot split an empty manifest");
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0) ||
      !(spec.val_fraction_of_train > 0.0 && spec.val_fraction_of_train < 1.0)) {
    throw ConfigError("split fractions must lie strictly inside (0, 1)");
  }

  Rng rng(spec.seed);
  std::vector<std::size_t> test_idx, val_idx, train_idx;

  auto partition = [&](std::vector<std::size_t>& pool) {
    rng.shuffle(pool);
    const std::size_t n = pool.size();
    const std::size_t n_test = round_count(spec.test_fraction * n);
    const std::size_t n_val =
        round_count(spec.val_fraction_of_train * (n - n_test));
    for (std::size_t i = 0; i < n; ++i) {
      if (i < n_test) {
        test_idx.push_back(pool[i]);
      } else if (i < n_test + n_val) {
        val_idx.push_back(pool[i]);
      } else {
        train_idx.push_back(pool[i]);
      }
    }
  };

  if (spec.stratified) {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
      by_class[manifest.entries[i].label].push_back(i);
    }
    for (auto& [label, pool] : by_class) {
      if (pool.size() < 3) {
        throw ClassTooSmall("class " + std::to_string(label) + " has only " +
                            std::to_string(pool.size()) + " items");
      }
      partition(pool);
    }
  } else {
    std::vector<std::size_t> pool(manifest.entries.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    partition(pool);
  }

  DatasetSplit split;
  split.train = subset(manifest, std::move(train_idx));
  split.val = subset(manifest, std::move(val_idx));
  split.test = subset(manifest, std::move(test_idx));
  return split;
}

}  // namespace audigit
