#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ltft/signal.hpp"

namespace ltft::cli {

/// Mono 16-bit PCM audio.
struct WavAudio {
  std::vector<std::int16_t> samples;
  std::uint32_t sample_rate = 16000;
};

/// RIFF/WAVE PCM16, mono or stereo (averaged to mono). Malformed input is a
/// parse-error; other codecs, bit depths or channel counts are unsupported-format.
WavAudio wav_read(const std::string& path);
WavAudio wav_read(std::istream& in);

void wav_write(const std::string& path, const WavAudio& audio);
void wav_write(std::ostream& out, const WavAudio& audio);

/// Samples divided by 32768, zero-padded to an even length of at least 4.
RealSignal to_signal(const WavAudio& audio);
/// Rounded to nearest and clipped to the int16 range.
WavAudio from_signal(const RealSignal& signal);

}  // namespace ltft::cli
