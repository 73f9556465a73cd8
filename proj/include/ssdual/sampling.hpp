#pragma once

#include <cstdint>
#include <vector>

#include "ssdual/error.hpp"

namespace ssdual {

/// Counter-based random stream: draw n of stream (seed, id) is a fixed hash
/// of (seed, id, n), so results never depend on scheduling or worker count.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(seed + kGolden) ^ mix(stream_id ^ kFleaMix)) {}

  std::uint64_t next() { return mix(key_ + (++counter_) * kGolden); }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kFleaMix = 0xD1B54A32D192ED03ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Walker/Vose alias table over outcomes 0..K-1; sampling costs one 64-bit
/// draw (high bits pick the cell, low bits the coin).
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights);

  std::uint32_t sample(std::uint64_t r) const {
    const std::uint32_t cell =
        static_cast<std::uint32_t>((static_cast<unsigned __int128>(r >> 32) * cells_) >> 32);
    const std::uint32_t coin = static_cast<std::uint32_t>(r);
    return coin < threshold_[cell] ? cell : alias_[cell];
  }

  std::uint32_t size() const noexcept { return cells_; }

 private:
  std::uint32_t cells_;
  std::vector<std::uint32_t> threshold_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace ssdual
