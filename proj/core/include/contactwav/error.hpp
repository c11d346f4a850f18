#pragma once

#include <stdexcept>
#include <string>

namespace contactwav {

// Error categories surfaced by the pipeline. The CLI maps any of these to
// exit code 2; usage problems are handled by the argument parser (exit 1).
enum class Errc {
  missing_file,
  malformed_manifest,
  unsupported_audio_format,
  non_monotonic_timestamps,
  out_of_range,
  empty_input,
  invalid_spec,
  too_short,
  invalid_config,
  non_unit_quaternion,
  degenerate_sixd,
  dimension_mismatch,
  no_onset,
  insufficient_context,
  no_taps,
  empty_corpus,
  image_too_small,
  insufficient_future,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_file: return "MissingFile";
    case Errc::malformed_manifest: return "MalformedManifest";
    case Errc::unsupported_audio_format: return "UnsupportedAudioFormat";
    case Errc::non_monotonic_timestamps: return "NonMonotonicTimestamps";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::too_short: return "TooShort";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::non_unit_quaternion: return "NonUnitQuaternion";
    case Errc::degenerate_sixd: return "DegenerateSixD";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::no_onset: return "NoOnset";
    case Errc::insufficient_context: return "InsufficientContext";
    case Errc::no_taps: return "NoTaps";
    case Errc::empty_corpus: return "EmptyCorpus";
    case Errc::image_too_small: return "ImageTooSmall";
    case Errc::insufficient_future: return "InsufficientFuture";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace contactwav
