#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace audigit {

// Mono audio in [-1, 1] plus the metadata the pipeline carries around.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;
  std::optional<int> label;
  std::string source_id;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Decodes a RIFF/WAVE container holding PCM (format code 1) at 8 or 16 bits,
// 1 or 2 channels. Stereo is averaged to mono; integer samples are scaled by
// 2^(bits-1). Throws MalformedContainer / UnsupportedEncoding.
AudioClip parse_wav(std::span<const std::uint8_t> bytes);

AudioClip read_wav(const std::filesystem::path& file);

// 16-bit PCM mono writer, used for synthetic corpora and test fixtures.
void write_wav_pcm16(const std::filesystem::path& file,
                     std::span<const double> samples, int sample_rate);

// Forces a clip to exactly round(target_seconds * sample_rate) samples:
// longer clips are truncated, shorter ones zero-padded at the end.
AudioClip fix_duration(const AudioClip& clip, double target_seconds);

}  // namespace audigit
