#include "ltft/cli/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "ltft/error.hpp"

namespace ltft::cli {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

void put32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

WavAudio wav_read(std::istream& in) {
  const std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(raw.data());
  const std::size_t size = raw.size();
  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
    fail(Errc::parse_error, "not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    const std::uint32_t length = u32(chunk + 4);
    if (length > size - pos - 8) fail(Errc::parse_error, "truncated WAVE chunk");
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (length < 16) fail(Errc::parse_error, "fmt chunk too short");
      std::uint16_t format = u16(chunk + 8);
      channels = u16(chunk + 10);
      rate = u32(chunk + 12);
      bits = u16(chunk + 22);
      if (format == kFormatExtensible) {
        if (length < 40) fail(Errc::parse_error, "extensible fmt chunk too short");
        format = u16(chunk + 32);
      }
      if (format != kFormatPcm) {
        fail(Errc::unsupported_format, "WAVE codec " + std::to_string(format) + " is not PCM");
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      pcm = chunk + 8;
      pcm_bytes = length;
    }
    pos += 8 + length + (length & 1u);
  }
  if (!have_fmt) fail(Errc::parse_error, "missing fmt chunk");
  if (pcm == nullptr) fail(Errc::parse_error, "missing data chunk");
  if (bits != 16) fail(Errc::unsupported_format, "only 16-bit PCM is supported");
  if (channels != 1 && channels != 2) {
    fail(Errc::unsupported_format, std::to_string(channels) + "-channel audio is not supported");
  }
  if (rate == 0) fail(Errc::parse_error, "sample rate is zero");

  WavAudio audio;
  audio.sample_rate = rate;
  const std::size_t frame = 2u * channels;
  const std::size_t frames = pcm_bytes / frame;
  audio.samples.reserve(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const unsigned char* f = pcm + i * frame;
    const auto left = static_cast<std::int16_t>(u16(f));
    if (channels == 1) {
      audio.samples.push_back(left);
    } else {
      const auto right = static_cast<std::int16_t>(u16(f + 2));
      audio.samples.push_back(static_cast<std::int16_t>((left + right) >> 1));
    }
  }
  return audio;
}

WavAudio wav_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return wav_read(in);
}

void wav_write(std::ostream& out, const WavAudio& audio) {
  const auto bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::string buf;
  buf.reserve(44 + bytes);
  buf += "RIFF";
  put32(buf, 36 + bytes);
  buf += "WAVEfmt ";
  put32(buf, 16);
  put16(buf, kFormatPcm);
  put16(buf, 1);
  put32(buf, audio.sample_rate);
  put32(buf, audio.sample_rate * 2);
  put16(buf, 2);
  put16(buf, 16);
  buf += "data";
  put32(buf, bytes);
  for (std::int16_t s : audio.samples) put16(buf, static_cast<std::uint16_t>(s));
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) fail(Errc::io_error, "failed to write WAVE data");
}

void wav_write(const std::string& path, const WavAudio& audio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot create '" + path + "'");
  wav_write(out, audio);
}

RealSignal to_signal(const WavAudio& audio) {
  RealSignal s;
  s.sample_rate = static_cast<double>(audio.sample_rate);
  s.samples.reserve(audio.samples.size() + 4);
  for (std::int16_t v : audio.samples) s.samples.push_back(static_cast<double>(v) / 32768.0);
  if (s.samples.size() % 2 != 0) s.samples.push_back(0.0);
  while (s.samples.size() < 4) s.samples.push_back(0.0);
  return s;
}

WavAudio from_signal(const RealSignal& signal) {
  require(signal.sample_rate >= 1.0 && signal.sample_rate < 4.3e9, Errc::invalid_parameter,
          "sample rate does not fit a WAVE header");
  WavAudio audio;
  audio.sample_rate = static_cast<std::uint32_t>(std::lround(signal.sample_rate));
  audio.samples.reserve(signal.size());
  for (double x : signal.samples) {
    const double v = std::clamp(std::round(x * 32768.0), -32768.0, 32767.0);
    audio.samples.push_back(static_cast<std::int16_t>(v));
  }
  return audio;
}

}  // namespace ltft::cli
