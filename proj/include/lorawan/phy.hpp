#pragma once

#include <cstdint>

namespace lorawan::phy {

inline constexpr int kMinSf = 7;
inline constexpr int kMaxSf = 12;
inline constexpr int kSfCount = kMaxSf - kMinSf + 1;

// Radio parameters of a single LoRa frame.
struct TransmissionProfile {
  int sf = 7;
  std::int64_t bandwidth_hz = 125000;
  int coding_rate_denominator = 5;  // coding rate 4/denominator, 5..8
  int preamble_symbols = 8;
  bool explicit_header = true;
  bool crc_enabled = true;
  bool low_dr_optimize = false;
  int payload_bytes = 1;
};

// True for the bandwidths a LoRa modem supports (7.8 kHz .. 500 kHz set).
bool valid_bandwidth(std::int64_t bandwidth_hz);

// Throws std::domain_error on any out-of-range field.
void validate(const TransmissionProfile& profile);

// Profile with conventional defaults: explicit header, CRC on, preamble 8,
// and low-data-rate optimization enabled for SF11/SF12 at BW <= 125 kHz.
TransmissionProfile make_profile(int sf, std::int64_t bandwidth_hz,
                                 int coding_rate_denominator, int payload_bytes);

// Largest MAC payload a frame may carry per spreading factor (EU868 table).
int max_payload_bytes(int sf);

double symbol_duration_s(int sf, std::int64_t bandwidth_hz);

// Number of payload symbols (the 8-symbol base plus coded groups).
// payload_bytes = 0 is allowed here; it models an empty downlink frame.
std::int64_t payload_symbol_count(int sf, int coding_rate_denominator,
                                  int payload_bytes, bool explicit_header,
                                  bool crc_enabled, bool low_dr_optimize);

// Frame airtime in integer microseconds (round to nearest), computed from
// raw parameters without payload-size validation.
std::int64_t time_on_air_us_raw(int sf, std::int64_t bandwidth_hz,
                                int coding_rate_denominator, int preamble_symbols,
                                int payload_bytes, bool explicit_header,
                                bool crc_enabled, bool low_dr_optimize);

std::int64_t time_on_air_us(const TransmissionProfile& profile);
double time_on_air_s(const TransmissionProfile& profile);

// Useful bit rate sf * (BW / 2^sf) * (4 / coding_rate_denominator).
double bit_rate_bps(const TransmissionProfile& profile);

// Modulation rate before coding, sf * BW / 2^sf.
double raw_bit_rate_bps(int sf, std::int64_t bandwidth_hz);

}  // namespace lorawan::phy
