#include "descrack/des.hpp"

#include <bit>
#include <cassert>
#include <cctype>
#include <stdexcept>

#include "descrack/des_tables.hpp"

namespace descrack {
namespace des {

using namespace tables;

std::uint64_t apply_permutation(std::span<const std::uint8_t> table,
                                std::uint64_t input, int input_width) {
  assert(input_width >= 1 && input_width <= 64);
  assert(input_width == 64 || (input >> input_width) == 0);
  std::uint64_t out = 0;
  for (std::uint8_t entry : table) {
    assert(entry >= 1 && entry <= input_width);
    // 1-based MSB-first bit b of an n-bit word sits at machine position n-b.
    out = (out << 1) | ((input >> (input_width - entry)) & 1u);
  }
  return out;
}

std::uint64_t expand(std::uint32_t r) {
  return apply_permutation(kExpansion, r, 32);
}

std::uint32_t sbox_substitute(std::uint64_t x48) {
  assert((x48 >> 48) == 0);
  std::uint32_t out = 0;
  for (int i = 0; i < 8; ++i) {
    const auto group = static_cast<std::uint32_t>((x48 >> (42 - 6 * i)) & 0x3F);
    const std::uint32_t row = ((group >> 4) & 2u) | (group & 1u);
    const std::uint32_t col = (group >> 1) & 0xFu;
    out = (out << 4) | kSBox[i][row][col];
  }
  return out;
}

std::uint32_t round_function(std::uint32_t r, std::uint64_t k48) {
  const std::uint32_t s = sbox_substitute(expand(r) ^ k48);
  return static_cast<std::uint32_t>(apply_permutation(kRoundPermutation, s, 32));
}

Key64 key56_to_key64(Key56 k) {
  assert((k.v >> 56) == 0);
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) {
    const auto payload = static_cast<std::uint32_t>((k.v >> (49 - 7 * i)) & 0x7F);
    const std::uint32_t parity = 1u ^ (std::popcount(payload) & 1u);
    out = (out << 8) | (payload << 1) | parity;
  }
  return Key64{out};
}

Key56 key64_to_key56(Key64 k) {
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) {
    out = (out << 7) | ((k.v >> (57 - 8 * i)) & 0x7F);
  }
  return Key56{out};
}

bool has_odd_parity(Key64 k) {
  for (int i = 0; i < 8; ++i) {
    if ((std::popcount((k.v >> (8 * i)) & 0xFF) & 1) == 0) return false;
  }
  return true;
}

KeySchedule key_schedule(Key64 k, ScheduleTrace* trace) {
  const std::uint64_t cd = apply_permutation(kPermutedChoice1, k.v, 64);
  auto c = static_cast<std::uint32_t>(cd >> 28);
  auto d = static_cast<std::uint32_t>(cd & 0x0FFFFFFF);
  if (trace) trace->cd[0] = KeyHalves{c, d};

  KeySchedule ks;
  for (int round = 0; round < kRounds; ++round) {
    const int rot = kRotations[round];
    c = ((c << rot) | (c >> (28 - rot))) & 0x0FFFFFFF;
    d = ((d << rot) | (d >> (28 - rot))) & 0x0FFFFFFF;
    if (trace) trace->cd[round + 1] = KeyHalves{c, d};
    const std::uint64_t halves = (static_cast<std::uint64_t>(c) << 28) | d;
    ks.subkeys[round] = apply_permutation(kPermutedChoice2, halves, 56);
  }
  return ks;
}

KeySchedule key_schedule(Key56 k, ScheduleTrace* trace) {
  return key_schedule(key56_to_key64(k), trace);
}

KeySchedule reverse_schedule(const KeySchedule& s) {
  KeySchedule out;
  for (int i = 0; i < kRounds; ++i) out.subkeys[i] = s.subkeys[kRounds - 1 - i];
  return out;
}

Block apply_rounds(Block in, const KeySchedule& ks, DatapathTrace* trace) {
  const std::uint64_t x = apply_permutation(kInitialPermutation, in.v, 64);
  auto l = static_cast<std::uint32_t>(x >> 32);
  auto r = static_cast<std::uint32_t>(x);
  if (trace) {
    trace->l[0] = l;
    trace->r[0] = r;
  }
  for (int round = 0; round < kRounds; ++round) {
    const std::uint32_t next_r = l ^ round_function(r, ks.subkeys[round]);
    l = r;
    r = next_r;
    if (trace) {
      trace->l[round + 1] = l;
      trace->r[round + 1] = r;
    }
  }
  // Final swap: the preoutput is R16 || L16.
  const std::uint64_t pre = (static_cast<std::uint64_t>(r) << 32) | l;
  return Block{apply_permutation(kFinalPermutation, pre, 64)};
}

Block encrypt_block(Block p, Key64 k) { return apply_rounds(p, key_schedule(k)); }

Block decrypt_block(Block c, Key64 k) {
  return apply_rounds(c, reverse_schedule(key_schedule(k)));
}

Block encrypt_block(Block p, Key56 k) { return encrypt_block(p, key56_to_key64(k)); }

Block decrypt_block(Block c, Key56 k) { return decrypt_block(c, key56_to_key64(k)); }

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("DES table defect: ") + what);
}

}  // namespace

void check_tables() {
  // IP and FP are mutual inverses.
  for (int b = 1; b <= 64; ++b) {
    require(kFinalPermutation[kInitialPermutation[b - 1] - 1] == b,
            "FP(IP) is not the identity");
    require(kInitialPermutation[kFinalPermutation[b - 1] - 1] == b,
            "IP(FP) is not the identity");
  }

  // E covers 1..32 with exactly 16 duplicated source bits.
  std::array<int, 33> uses{};
  for (auto e : kExpansion) {
    require(e >= 1 && e <= 32, "E entry out of range");
    ++uses[e];
  }
  int twice = 0;
  for (int b = 1; b <= 32; ++b) {
    require(uses[b] == 1 || uses[b] == 2, "E source bit used 0 or >2 times");
    if (uses[b] == 2) ++twice;
  }
  require(twice == 16, "E must duplicate exactly 16 source bits");

  // P is a permutation of 1..32.
  std::array<bool, 33> seen{};
  for (auto p : kRoundPermutation) {
    require(p >= 1 && p <= 32 && !seen[p], "P is not a permutation of 1..32");
    seen[p] = true;
  }

  // PC1 selects injectively from 1..64, never a parity position (8,16,..,64).
  std::array<bool, 65> pc1_seen{};
  for (auto e : kPermutedChoice1) {
    require(e >= 1 && e <= 64 && !pc1_seen[e], "PC1 not injective");
    require(e % 8 != 0, "PC1 selects a parity bit");
    pc1_seen[e] = true;
  }

  // PC2 selects injectively from 1..56.
  std::array<bool, 57> pc2_seen{};
  for (auto e : kPermutedChoice2) {
    require(e >= 1 && e <= 56 && !pc2_seen[e], "PC2 not injective");
    pc2_seen[e] = true;
  }

  // Rotation schedule: 1 for rounds 1,2,9,16, else 2; total 28.
  int total = 0;
  for (int i = 0; i < kRounds; ++i) {
    const bool single = (i == 0 || i == 1 || i == 8 || i == 15);
    require(kRotations[i] == (single ? 1 : 2), "rotation schedule wrong");
    total += kRotations[i];
  }
  require(total == 28, "rotations must sum to 28");

  // Every S-box row is a permutation of 0..15.
  for (int box = 0; box < 8; ++box) {
    for (int row = 0; row < 4; ++row) {
      std::uint32_t mask = 0;
      for (int col = 0; col < 16; ++col) mask |= 1u << kSBox[box][row][col];
      require(mask == 0xFFFF, "S-box row is not a permutation of 0..15");
    }
  }
}

}  // namespace des

namespace {

std::string hex_lower(std::uint64_t v, int digits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::uint64_t parse_hex(std::string_view s, std::size_t digits, const char* what) {
  if (s.size() != digits) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(digits) + " hex chars, got " +
                                std::to_string(s.size()));
  }
  std::uint64_t v = 0;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw std::invalid_argument(std::string(what) + ": invalid hex char '" +
                                  ch + "'");
    }
    v = (v << 4) | static_cast<unsigned>(nibble);
  }
  return v;
}

}  // namespace

std::string to_hex(Block b) { return hex_lower(b.v, 16); }
std::string to_hex(Key56 k) { return hex_lower(k.v, 14); }
std::string to_hex(Key64 k) { return hex_lower(k.v, 16); }

Block parse_block_hex(std::string_view s) {
  return Block{parse_hex(s, 16, "block")};
}

Key56 parse_key56_hex(std::string_view s) {
  return Key56{parse_hex(s, 14, "key")};
}

Key64 parse_key64_hex(std::string_view s) {
  return Key64{parse_hex(s, 16, "key")};
}

}  // namespace descrack
