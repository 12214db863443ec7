#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

// Bit-exact DES primitive: permutations, round function, key schedule and
// single-block encrypt/decrypt.
//
// Bit numbering: all tables use the standard's 1-based MSB-first convention
// (bit 1 = most significant bit). apply_permutation() is the single place
// where that convention meets machine bit positions; everything else goes
// through it or through indices derived from it.

namespace descrack {

/// 64-bit data block (plaintext or ciphertext).
struct Block {
  std::uint64_t v = 0;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// 56-bit key in its canonical search-space form (value < 2^56).
struct Key56 {
  std::uint64_t v = 0;
  friend auto operator<=>(const Key56&, const Key56&) = default;
};

/// 64-bit key form: 7 key bits per byte, low bit of each byte is odd parity.
struct Key64 {
  std::uint64_t v = 0;
  friend auto operator<=>(const Key64&, const Key64&) = default;
};

/// The 28-bit key schedule halves C and D.
struct KeyHalves {
  std::uint32_t c = 0;
  std::uint32_t d = 0;
  friend auto operator<=>(const KeyHalves&, const KeyHalves&) = default;
};

/// Sixteen 48-bit round subkeys, subkeys[0] = K1 .. subkeys[15] = K16.
struct KeySchedule {
  std::array<std::uint64_t, 16> subkeys{};
  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;
};

namespace des {

inline constexpr int kRounds = 16;
inline constexpr std::uint64_t kKeyspaceSize = std::uint64_t{1} << 56;

/// C_i/D_i after each rotation step; cd[0] is C0/D0, cd[16] is C16/D16.
struct ScheduleTrace {
  std::array<KeyHalves, 17> cd{};
};

/// L_i/R_i per round; l[0]/r[0] are the halves right after IP.
struct DatapathTrace {
  std::array<std::uint32_t, 17> l{};
  std::array<std::uint32_t, 17> r{};
};

// Applies a 1-based MSB-first permutation table. Output bit j (counting from
// the most significant of table.size() bits) is input bit table[j] of an
// input_width-bit word. Table entries out of range are programming errors
// (asserted, not runtime-checked).
std::uint64_t apply_permutation(std::span<const std::uint8_t> table,
                                std::uint64_t input, int input_width);

/// E expansion: 32-bit half to 48 bits.
std::uint64_t expand(std::uint32_t r);

/// Eight parallel 6->4 S-box substitutions of a 48-bit word.
std::uint32_t sbox_substitute(std::uint64_t x48);

/// The round function f: P(S(E(r) ^ k48)).
std::uint32_t round_function(std::uint32_t r, std::uint64_t k48);

Key64 key56_to_key64(Key56 k);
/// Inverse of key56_to_key64; parity bits are ignored, never validated.
Key56 key64_to_key56(Key64 k);
/// True when every byte of k has odd parity.
bool has_odd_parity(Key64 k);

KeySchedule key_schedule(Key64 k, ScheduleTrace* trace = nullptr);
KeySchedule key_schedule(Key56 k, ScheduleTrace* trace = nullptr);

/// Subkey order reversal: output subkey i = input subkey 17-i.
KeySchedule reverse_schedule(const KeySchedule& s);

/// IP, 16 Feistel rounds under the given schedule, final swap, FP.
Block apply_rounds(Block in, const KeySchedule& ks,
                   DatapathTrace* trace = nullptr);

Block encrypt_block(Block p, Key64 k);
Block decrypt_block(Block c, Key64 k);
Block encrypt_block(Block p, Key56 k);
Block decrypt_block(Block c, Key56 k);

/// Sanity-checks the FIPS table constants (inverse pairs, injectivity,
/// S-box row permutations). Throws std::logic_error on any defect.
void check_tables();

}  // namespace des

// Hex text convention: Block and Key64 are 16 hex chars, Key56 is 14.
// Parsing is case-insensitive and strict about length; output is lowercase.
std::string to_hex(Block b);
std::string to_hex(Key56 k);
std::string to_hex(Key64 k);
Block parse_block_hex(std::string_view s);    // throws std::invalid_argument
Key56 parse_key56_hex(std::string_view s);    // throws std::invalid_argument
Key64 parse_key64_hex(std::string_view s);    // throws std::invalid_argument

}  // namespace descrack
