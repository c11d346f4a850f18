#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace contactwav {

// Mono waveform with amplitudes in [-1, 1]. start_time_s is the capture-clock
// time of sample 0; sample k was captured at start_time_s + k / sample_rate_hz.
struct AudioTrack {
  std::vector<double> samples;
  int sample_rate_hz = 48000;
  double start_time_s = 0.0;

  std::int64_t size() const { return std::int64_t(samples.size()); }
  double duration_s() const {
    return double(samples.size()) / double(sample_rate_hz);
  }
};

double rms(std::span<const double> samples);

enum class WavFormat { float32, int16 };

// RIFF/WAVE, mono only. PCM int16 samples map to [-1, 1] by division by
// 32768 (exact at -32768); IEEE float32 is taken verbatim.
AudioTrack read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const AudioTrack& track,
               WavFormat format = WavFormat::float32);

}  // namespace contactwav
