#include "audigit/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "audigit/errors.hpp"

namespace audigit {

namespace {

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  void skip(std::size_t n) {
    require(n);
    pos_ += n;
  }

  std::uint16_t u16() {
    require(2);
    std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_]) |
                      static_cast<std::uint16_t>(bytes_[pos_ + 1]) << 8;
    pos_ += 2;
    return v;
  }

  std::uint32_t u32() {
    require(4);
    std::uint32_t v = static_cast<std::uint32_t>(bytes_[pos_]) |
                      static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 8 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 16 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 3]) << 24;
    pos_ += 4;
    return v;
  }

  std::string tag4() {
    require(4);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return s;
  }

  std::span<const std::uint8_t> take(std::size_t n) {
    require(n);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  void require(std::size_t n) const {
    if (remaining() < n) {
      throw MalformedContainer("container truncated at byte " +
                               std::to_string(pos_));
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct FmtChunk {
  std::uint16_t format_code = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

}  // namespace

AudioClip parse_wav(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);

  if (r.tag4() != "RIFF") throw MalformedContainer("missing RIFF header");
  r.u32();  // overall size, unused; real files frequently get this wrong
  if (r.tag4() != "WAVE") throw MalformedContainer("missing WAVE tag");

  std::optional<FmtChunk> fmt;
  std::span<const std::uint8_t> data;
  bool have_data = false;

  while (r.remaining() >= 8) {
    const std::string id = r.tag4();
    const std::uint32_t size = r.u32();
    if (id == "fmt ") {
      if (size < 16) throw MalformedContainer("fmt chunk too small");
      FmtChunk f;
      f.format_code = r.u16();
      f.channels = r.u16();
      f.sample_rate = r.u32();
      r.u32();  // byte rate
      r.u16();  // block align
      f.bits_per_sample = r.u16();
      r.skip(size - 16);
      fmt = f;
    } else if (id == "data") {
      data = r.take(size);
      have_data = true;
    } else {
      r.skip(size);
    }
    if (size % 2 == 1 && r.remaining() > 0) r.skip(1);  // chunk pad byte
  }

  if (!fmt) throw MalformedContainer("no fmt chunk");
  if (!have_data) throw MalformedContainer("no data chunk");
  if (fmt->format_code != 1) {
    throw UnsupportedEncoding("format code " +
                              std::to_string(fmt->format_code) +
                              " (only PCM is supported)");
  }
  if (fmt->bits_per_sample != 8 && fmt->bits_per_sample != 16) {
    throw UnsupportedEncoding(std::to_string(fmt->bits_per_sample) +
                              "-bit PCM (only 8 and 16 supported)");
  }
  if (fmt->channels != 1 && fmt->channels != 2) {
    throw UnsupportedEncoding(std::to_string(fmt->channels) + " channels");
  }
  if (fmt->sample_rate == 0) throw MalformedContainer("zero sample rate");

  const std::size_t bytes_per_sample = fmt->bits_per_sample / 8;
  const std::size_t frame_bytes = bytes_per_sample * fmt->channels;
  const std::size_t n_frames = data.size() / frame_bytes;
  if (n_frames == 0) throw MalformedContainer("data chunk holds no samples");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(fmt->sample_rate);
  clip.samples.resize(n_frames);

  const double scale = 1.0 / static_cast<double>(1 << (fmt->bits_per_sample - 1));
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t ch = 0; ch < fmt->channels; ++ch) {
      const std::size_t off = i * frame_bytes + ch * bytes_per_sample;
      if (fmt->bits_per_sample == 16) {
        std::int16_t v = static_cast<std::int16_t>(
            static_cast<std::uint16_t>(data[off]) |
            static_cast<std::uint16_t>(data[off + 1]) << 8);
        acc += v * scale;
      } else {
        acc += (static_cast<int>(data[off]) - 128) * scale;
      }
    }
    clip.samples[i] = acc / fmt->channels;
  }
  return clip;
}

AudioClip read_wav(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  AudioClip clip = parse_wav(bytes);
  clip.source_id = file.string();
  return clip;
}

void write_wav_pcm16(const std::filesystem::path& file,
                     std::span<const double> samples, int sample_rate) {
  if (sample_rate <= 0) throw ConfigError("sample rate must be positive");

  const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);

  auto put_tag = [&](const char* t) { out.insert(out.end(), t, t + 4); };
  auto put_u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xFF);
  };
  auto put_u16 = [&](std::uint16_t v) {
    out.push_back(v & 0xFF);
    out.push_back((v >> 8) & 0xFF);
  };

  put_tag("RIFF");
  put_u32(36 + data_bytes);
  put_tag("WAVE");
  put_tag("fmt ");
  put_u32(16);
  put_u16(1);  // PCM
  put_u16(1);  // mono
  put_u32(static_cast<std::uint32_t>(sample_rate));
  put_u32(static_cast<std::uint32_t>(sample_rate) * 2);
  put_u16(2);
  put_u16(16);
  put_tag("data");
  put_u32(data_bytes);
  for (double s : samples) {
    long v = std::lround(s * 32768.0);
    v = std::clamp(v, -32768L, 32767L);
    put_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }

  std::ofstream f(file, std::ios::binary);
  if (!f) throw IoError("cannot write " + file.string());
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write to " + file.string());
}

AudioClip fix_duration(const AudioClip& clip, double target_seconds) {
  if (target_seconds <= 0) throw ConfigError("target duration must be positive");
  const std::size_t target =
      static_cast<std::size_t>(std::llround(target_seconds * clip.sample_rate));
  AudioClip out = clip;
  out.samples.resize(target, 0.0);  // truncates or zero-pads the tail
  return out;
}

}  // namespace audigit
