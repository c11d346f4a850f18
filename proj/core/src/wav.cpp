#include "contactwav/audio.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "contactwav/error.hpp"

namespace contactwav {

double rms(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (const double s : samples) acc += s * s;
  return std::sqrt(acc / double(samples.size()));
}

namespace {

std::uint32_t read_u32le(const unsigned char* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
         std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
}

std::uint16_t read_u16le(const unsigned char* p) {
  return std::uint16_t(p[0] | p[1] << 8);
}

void put_u32le(std::string& out, std::uint32_t v) {
  out.push_back(char(v & 0xff));
  out.push_back(char((v >> 8) & 0xff));
  out.push_back(char((v >> 16) & 0xff));
  out.push_back(char((v >> 24) & 0xff));
}

void put_u16le(std::string& out, std::uint16_t v) {
  out.push_back(char(v & 0xff));
  out.push_back(char((v >> 8) & 0xff));
}

}  // namespace

AudioTrack read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::missing_file, "cannot open WAV file " + path.string());

  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();

  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
    fail(Errc::unsupported_audio_format, "not a RIFF/WAVE file: " + path.string());

  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char* data_ptr = nullptr;
  std::uint32_t data_len = 0;

  std::size_t off = 12;
  while (off + 8 <= n) {
    const std::uint32_t chunk_len = read_u32le(p + off + 4);
    const unsigned char* chunk = p + off + 8;
    if (off + 8 + chunk_len > n)
      fail(Errc::unsupported_audio_format, "truncated WAV chunk in " + path.string());
    if (std::memcmp(p + off, "fmt ", 4) == 0) {
      if (chunk_len < 16)
        fail(Errc::unsupported_audio_format, "short fmt chunk in " + path.string());
      format_tag = read_u16le(chunk);
      channels = read_u16le(chunk + 2);
      rate = read_u32le(chunk + 4);
      bits = read_u16le(chunk + 14);
      have_fmt = true;
    } else if (std::memcmp(p + off, "data", 4) == 0) {
      data_ptr = chunk;
      data_len = chunk_len;
    }
    off += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_ptr == nullptr)
    fail(Errc::unsupported_audio_format, "missing fmt/data chunk in " + path.string());
  if (channels != 1)
    fail(Errc::unsupported_audio_format,
         "expected mono audio, got " + std::to_string(channels) +
             " channels in " + path.string());
  if (rate == 0)
    fail(Errc::unsupported_audio_format, "zero sample rate in " + path.string());

  AudioTrack track;
  track.sample_rate_hz = int(rate);

  if (format_tag == 1 && bits == 16) {
    const std::size_t count = data_len / 2;
    track.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::int16_t v =
          std::int16_t(read_u16le(data_ptr + 2 * i));
      track.samples[i] = double(v) / 32768.0;
    }
  } else if (format_tag == 3 && bits == 32) {
    const std::size_t count = data_len / 4;
    track.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint32_t u = read_u32le(data_ptr + 4 * i);
      float f;
      std::memcpy(&f, &u, 4);
      track.samples[i] = double(f);
    }
  } else {
    fail(Errc::unsupported_audio_format,
         "unsupported encoding (format tag " + std::to_string(format_tag) +
             ", " + std::to_string(bits) + " bits) in " + path.string());
  }
  return track;
}

void write_wav(const std::filesystem::path& path, const AudioTrack& track,
               WavFormat format) {
  const std::uint16_t bytes_per_sample = (format == WavFormat::float32) ? 4 : 2;
  const std::uint32_t data_len =
      std::uint32_t(track.samples.size()) * bytes_per_sample;

  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32le(out, 36 + data_len);
  out += "WAVEfmt ";
  put_u32le(out, 16);
  put_u16le(out, format == WavFormat::float32 ? 3 : 1);
  put_u16le(out, 1);  // mono
  put_u32le(out, std::uint32_t(track.sample_rate_hz));
  put_u32le(out, std::uint32_t(track.sample_rate_hz) * bytes_per_sample);
  put_u16le(out, bytes_per_sample);
  put_u16le(out, std::uint16_t(8 * bytes_per_sample));
  out += "data";
  put_u32le(out, data_len);

  if (format == WavFormat::float32) {
    for (const double s : track.samples) {
      const float f = float(s);
      std::uint32_t u;
      std::memcpy(&u, &f, 4);
      put_u32le(out, u);
    }
  } else {
    for (const double s : track.samples) {
      const double clamped = std::max(-1.0, std::min(1.0, s));
      const auto v = std::int16_t(std::lrint(clamped * 32767.0));
      put_u16le(out, std::uint16_t(v));
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::io_error, "cannot write WAV file " + path.string());
  f.write(out.data(), std::streamsize(out.size()));
  if (!f) fail(Errc::io_error, "short write to " + path.string());
}

}  // namespace contactwav
