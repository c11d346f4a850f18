#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "contactwav/audio.hpp"
#include "contactwav/rotation.hpp"

namespace contactwav {

// Control/pose grid period. Poses are nominally 20 Hz; time lookups accept
// half a period of slack at either end.
inline constexpr double kPosePeriodS = 0.05;
inline constexpr double kPoseLookupTolS = kPosePeriodS / 2.0;

struct PoseSample {
  double t_s = 0.0;
  std::array<double, 3> position_m{};
  Quaternion orientation;
  double gripper_width = 0.0;  // normalized openness in [0, 1]
};

struct FrameIndex {
  std::vector<double> timestamps_s;     // strictly increasing
  double nominal_rate_hz = 60.0;
  std::vector<std::string> frame_refs;  // image path per frame
};

// One demonstration. Immutable after load; all operations below are pure
// reads, so episodes can be shared freely across parallel workers.
struct Episode {
  std::string id;
  AudioTrack audio;
  FrameIndex frames;
  std::vector<PoseSample> poses;  // strictly increasing t_s, nominal 20 Hz
  std::string environment_tag;
  double latency_s = 0.0;  // total audio latency, set by calibration
};

// Loads and validates an episode from a JSON manifest (schema in README).
// Relative paths inside the manifest resolve against the manifest directory.
Episode load_episode(const std::filesystem::path& manifest_path);

// Writes the manifest plus a float32 WAV next to it; load(save(e)) equals e
// field for field.
void save_episode(const Episode& episode,
                  const std::filesystem::path& manifest_path,
                  const std::filesystem::path& wav_path);

// Nearest pose sample; ties break toward the earlier sample. Throws
// OutOfRange when t_s falls outside [first - tol, last + tol].
std::size_t pose_index_at(const Episode& episode, double t_s);
const PoseSample& pose_at(const Episode& episode, double t_s);

// Frame reference whose timestamp is nearest t_s (earlier on ties).
std::size_t frame_index_at(const Episode& episode, double t_s);

// Samples covering [t_end_s - duration_s, t_end_s] on the latency-corrected
// clock (sample capture time minus episode.latency_s); the window therefore
// addresses capture times shifted later by latency_s. Left-pads with zeros
// when the window starts before the recording. Output length is exactly
// round(duration_s * sample_rate). The returned start_time_s is the window
// start on the corrected clock.
AudioTrack audio_segment(const Episode& episode, double t_end_s,
                         double duration_s);

}  // namespace contactwav
