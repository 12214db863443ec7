#include "descrack/engine.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "descrack/des_tables.hpp"

namespace descrack {

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::rolled: return "rolled";
    case EngineKind::unrolled: return "unrolled";
    case EngineKind::bitsliced: return "bitsliced";
  }
  return "?";
}

std::optional<EngineKind> engine_from_string(std::string_view name) {
  if (name == "rolled") return EngineKind::rolled;
  if (name == "unrolled") return EngineKind::unrolled;
  if (name == "bitsliced") return EngineKind::bitsliced;
  return std::nullopt;
}

void Engine::decrypt_batch(Block c, std::span<const Key56> keys,
                           std::span<Block> out) const {
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = decrypt(c, keys[i]);
}

std::vector<Block> Engine::decrypt_batch(Block c,
                                         std::span<const Key56> keys) const {
  std::vector<Block> out(keys.size());
  decrypt_batch(c, keys, out);
  return out;
}

namespace {

// One round datapath reused 16 times, every step through the generic
// table-walking routines.
class RolledEngine final : public Engine {
 public:
  EngineKind kind() const override { return EngineKind::rolled; }
  std::size_t batch_width() const override { return 1; }
  Block decrypt(Block c, Key56 k) const override {
    return des::decrypt_block(c, k);
  }
};

// Sixteen inlined rounds; E, the S-boxes and P are fused into eight
// 64-entry 32-bit tables built here from the standard's tables.
class UnrolledEngine final : public Engine {
 public:
  UnrolledEngine() {
    using namespace des::tables;
    for (int box = 0; box < 8; ++box) {
      for (std::uint32_t v = 0; v < 64; ++v) {
        const std::uint32_t row = ((v >> 4) & 2u) | (v & 1u);
        const std::uint32_t col = (v >> 1) & 0xFu;
        const std::uint32_t placed = std::uint32_t{kSBox[box][row][col]}
                                     << (28 - 4 * box);
        sp_[box][v] = static_cast<std::uint32_t>(
            des::apply_permutation(kRoundPermutation, placed, 32));
      }
    }
  }

  EngineKind kind() const override { return EngineKind::unrolled; }
  std::size_t batch_width() const override { return 1; }

  Block decrypt(Block c, Key56 k) const override {
    const KeySchedule ks = des::key_schedule(k);
    const std::uint64_t x =
        des::apply_permutation(des::tables::kInitialPermutation, c.v, 64);
    auto l = static_cast<std::uint32_t>(x >> 32);
    auto r = static_cast<std::uint32_t>(x);
    for (int round = 15; round >= 0; --round) {
      const std::uint32_t t = l ^ feistel(r, ks.subkeys[round]);
      l = r;
      r = t;
    }
    const std::uint64_t pre = (static_cast<std::uint64_t>(r) << 32) | l;
    return Block{
        des::apply_permutation(des::tables::kFinalPermutation, pre, 64)};
  }

 private:
  std::uint32_t feistel(std::uint32_t r, std::uint64_t k) const {
    // 6-bit E groups read straight off the rotated word; group i covers the
    // standard's bits 4i..4i+5 of R extended circularly on both ends.
    std::uint32_t out = 0;
    out |= sp_[0][(((r & 1u) << 5 | (r >> 27)) ^ (k >> 42)) & 0x3F];
    out |= sp_[1][((r >> 23) ^ (k >> 36)) & 0x3F];
    out |= sp_[2][((r >> 19) ^ (k >> 30)) & 0x3F];
    out |= sp_[3][((r >> 15) ^ (k >> 24)) & 0x3F];
    out |= sp_[4][((r >> 11) ^ (k >> 18)) & 0x3F];
    out |= sp_[5][((r >> 7) ^ (k >> 12)) & 0x3F];
    out |= sp_[6][((r >> 3) ^ (k >> 6)) & 0x3F];
    out |= sp_[7][(((r & 0x1Fu) << 1 | (r >> 31)) ^ k) & 0x3F];
    return out;
  }

  std::uint32_t sp_[8][64]{};
};

}  // namespace

std::unique_ptr<Engine> make_bitsliced_engine();  // engine_bitslice.cpp

std::unique_ptr<Engine> make_engine(EngineKind kind) {
  switch (kind) {
    case EngineKind::rolled: return std::make_unique<RolledEngine>();
    case EngineKind::unrolled: return std::make_unique<UnrolledEngine>();
    case EngineKind::bitsliced: return make_bitsliced_engine();
  }
  throw std::invalid_argument("unknown engine kind");
}

EngineStats bench(EngineKind kind, double seconds, std::uint64_t seed) {
  if (!(seconds > 0)) {
    throw std::invalid_argument("bench duration must be > 0");
  }
  const auto engine = make_engine(kind);

  // A fixed pool of pseudorandom inputs, regenerated identically every run.
  constexpr std::size_t kPool = 4096;
  std::vector<Key56> keys(kPool);
  std::vector<Block> blocks(kPool / 64);
  std::mt19937_64 rng(seed);
  for (auto& k : keys) k.v = rng() & (des::kKeyspaceSize - 1);
  for (auto& b : blocks) b.v = rng();

  std::vector<Block> out(kPool);
  std::uint64_t processed = 0;
  std::size_t block_ix = 0;
  const auto start = std::chrono::steady_clock::now();
  double elapsed = 0;
  do {
    engine->decrypt_batch(blocks[block_ix], keys, out);
    processed += kPool;
    block_ix = (block_ix + 1) % blocks.size();
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  } while (elapsed < seconds);

  EngineStats stats;
  stats.engine = kind;
  stats.blocks_processed = processed;
  stats.elapsed_seconds = elapsed;
  stats.throughput_bits_per_second =
      static_cast<double>(processed) * 64.0 / elapsed;
  stats.keys_per_second = static_cast<double>(processed) / elapsed;
  return stats;
}

}  // namespace descrack
