#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "descrack/des.hpp"

// Interchangeable decryption engines. All three produce bit-identical output;
// they trade setup cost and table size against per-key speed:
//   rolled    - one generic round routine applied 16 times (the des_core path)
//   unrolled  - 16 straight-line rounds over fused E/S/P lookup tables
//   bitsliced - boolean-circuit evaluation of 64 keys per machine word

namespace descrack {

enum class EngineKind { rolled, unrolled, bitsliced };

std::string_view to_string(EngineKind kind);
std::optional<EngineKind> engine_from_string(std::string_view name);

class Engine {
 public:
  virtual ~Engine() = default;

  virtual EngineKind kind() const = 0;

  /// Keys processed per internal slice: 64 for bitsliced, 1 for scalar kinds.
  virtual std::size_t batch_width() const = 0;

  virtual Block decrypt(Block c, Key56 k) const = 0;

  /// out[i] = decrypt(c, keys[i]); keys.size() == out.size(), any length.
  virtual void decrypt_batch(Block c, std::span<const Key56> keys,
                             std::span<Block> out) const;

  std::vector<Block> decrypt_batch(Block c, std::span<const Key56> keys) const;
};

std::unique_ptr<Engine> make_engine(EngineKind kind);

struct EngineStats {
  EngineKind engine = EngineKind::rolled;
  std::uint64_t blocks_processed = 0;
  double elapsed_seconds = 0;
  double throughput_bits_per_second = 0;  // blocks * 64 / elapsed
  double keys_per_second = 0;             // blocks / elapsed
};

inline constexpr std::uint64_t kBenchSeed = 0x5eedb10c5;

/// Decrypts pseudorandom (block, key) data for at least `seconds`; the seed
/// fixes the input stream so repeated runs process identical data.
/// Throws std::invalid_argument when seconds <= 0.
EngineStats bench(EngineKind kind, double seconds,
                  std::uint64_t seed = kBenchSeed);

namespace bitslice {

inline constexpr std::size_t kWidth = 64;

// In-place 64x64 bit-matrix transpose. Word w[i] is row i; columns are
// numbered MSB-first, so after the call bit (63-j) of word j holds what bit
// (63-i) of word i held before it. Involution.
void transpose64(std::uint64_t w[64]);

/// Spreads `keys` (low 56 bits each) into 56 bit-planes: plane[p] bit (63-s)
/// = key s bit (55-p). Missing slices (keys.size() < 64) read as key 0.
void slice_keys(std::span<const Key56> keys, std::uint64_t planes[56]);

/// Inverse of slice_keys for the first `count` slices.
void unslice_keys(const std::uint64_t planes[56], std::span<Key56> keys);

}  // namespace bitslice

}  // namespace descrack
