#include "ref_des.hpp"

#include <array>

namespace refdes {
namespace {

using Bits = std::array<int, 64>;  // bit[0] is the standard's bit 1 (MSB)

constexpr int IP[] = {58, 50, 42, 34, 26, 18, 10, 2,
                      60, 52, 44, 36, 28, 20, 12, 4,
                      62, 54, 46, 38, 30, 22, 14, 6,
                      64, 56, 48, 40, 32, 24, 16, 8,
                      57, 49, 41, 33, 25, 17, 9,  1,
                      59, 51, 43, 35, 27, 19, 11, 3,
                      61, 53, 45, 37, 29, 21, 13, 5,
                      63, 55, 47, 39, 31, 23, 15, 7};

constexpr int IP_INV[] = {40, 8, 48, 16, 56, 24, 64, 32,
                          39, 7, 47, 15, 55, 23, 63, 31,
                          38, 6, 46, 14, 54, 22, 62, 30,
                          37, 5, 45, 13, 53, 21, 61, 29,
                          36, 4, 44, 12, 52, 20, 60, 28,
                          35, 3, 43, 11, 51, 19, 59, 27,
                          34, 2, 42, 10, 50, 18, 58, 26,
                          33, 1, 41, 9,  49, 17, 57, 25};

constexpr int EBIT[] = {32, 1,  2,  3,  4,  5,
                        4,  5,  6,  7,  8,  9,
                        8,  9,  10, 11, 12, 13,
                        12, 13, 14, 15, 16, 17,
                        16, 17, 18, 19, 20, 21,
                        20, 21, 22, 23, 24, 25,
                        24, 25, 26, 27, 28, 29,
                        28, 29, 30, 31, 32, 1};

constexpr int P32[] = {16, 7,  20, 21,
                       29, 12, 28, 17,
                       1,  15, 23, 26,
                       5,  18, 31, 10,
                       2,  8,  24, 14,
                       32, 27, 3,  9,
                       19, 13, 30, 6,
                       22, 11, 4,  25};

constexpr int PC1[] = {57, 49, 41, 33, 25, 17, 9,
                       1,  58, 50, 42, 34, 26, 18,
                       10, 2,  59, 51, 43, 35, 27,
                       19, 11, 3,  60, 52, 44, 36,
                       63, 55, 47, 39, 31, 23, 15,
                       7,  62, 54, 46, 38, 30, 22,
                       14, 6,  61, 53, 45, 37, 29,
                       21, 13, 5,  28, 20, 12, 4};

constexpr int PC2[] = {14, 17, 11, 24, 1,  5,
                       3,  28, 15, 6,  21, 10,
                       23, 19, 12, 4,  26, 8,
                       16, 7,  27, 20, 13, 2,
                       41, 52, 31, 37, 47, 55,
                       30, 40, 51, 45, 33, 48,
                       44, 49, 39, 56, 34, 53,
                       46, 42, 50, 36, 29, 32};

constexpr int SHIFTS[] = {1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1};

constexpr int SBOXES[8][64] = {
    {14, 4,  13, 1, 2,  15, 11, 8,  3,  10, 6,  12, 5,  9,  0, 7,
     0,  15, 7,  4, 14, 2,  13, 1,  10, 6,  12, 11, 9,  5,  3, 8,
     4,  1,  14, 8, 13, 6,  2,  11, 15, 12, 9,  7,  3,  10, 5, 0,
     15, 12, 8,  2, 4,  9,  1,  7,  5,  11, 3,  14, 10, 0,  6, 13},
    {15, 1,  8,  14, 6,  11, 3,  4,  9,  7, 2,  13, 12, 0, 5,  10,
     3,  13, 4,  7,  15, 2,  8,  14, 12, 0, 1,  10, 6,  9, 11, 5,
     0,  14, 7,  11, 10, 4,  13, 1,  5,  8, 12, 6,  9,  3, 2,  15,
     13, 8,  10, 1,  3,  15, 4,  2,  11, 6, 7,  12, 0,  5, 14, 9},
    {10, 0,  9,  14, 6, 3,  15, 5,  1,  13, 12, 7,  11, 4,  2,  8,
     13, 7,  0,  9,  3, 4,  6,  10, 2,  8,  5,  14, 12, 11, 15, 1,
     13, 6,  4,  9,  8, 15, 3,  0,  11, 1,  2,  12, 5,  10, 14, 7,
     1,  10, 13, 0,  6, 9,  8,  7,  4,  15, 14, 3,  11, 5,  2,  12},
    {7,  13, 14, 3, 0,  6,  9,  10, 1,  2, 8, 5,  11, 12, 4,  15,
     13, 8,  11, 5, 6,  15, 0,  3,  4,  7, 2, 12, 1,  10, 14, 9,
     10, 6,  9,  0, 12, 11, 7,  13, 15, 1, 3, 14, 5,  2,  8,  4,
     3,  15, 0,  6, 10, 1,  13, 8,  9,  4, 5, 11, 12, 7,  2,  14},
    {2,  12, 4,  1,  7,  10, 11, 6,  8,  5,  3,  15, 13, 0, 14, 9,
     14, 11, 2,  12, 4,  7,  13, 1,  5,  0,  15, 10, 3,  9, 8,  6,
     4,  2,  1,  11, 10, 13, 7,  8,  15, 9,  12, 5,  6,  3, 0,  14,
     11, 8,  12, 7,  1,  14, 2,  13, 6,  15, 0,  9,  10, 4, 5,  3},
    {12, 1,  10, 15, 9, 2,  6,  8,  0,  13, 3,  4,  14, 7,  5,  11,
     10, 15, 4,  2,  7, 12, 9,  5,  6,  1,  13, 14, 0,  11, 3,  8,
     9,  14, 15, 5,  2, 8,  12, 3,  7,  0,  4,  10, 1,  13, 11, 6,
     4,  3,  2,  12, 9, 5,  15, 10, 11, 14, 1,  7,  6,  0,  8,  13},
    {4,  11, 2,  14, 15, 0, 8,  13, 3,  12, 9, 7,  5,  10, 6, 1,
     13, 0,  11, 7,  4,  9, 1,  10, 14, 3,  5, 12, 2,  15, 8, 6,
     1,  4,  11, 13, 12, 3, 7,  14, 10, 15, 6, 8,  0,  5,  9, 2,
     6,  11, 13, 8,  1,  4, 10, 7,  9,  5,  0, 15, 14, 2,  3, 12},
    {13, 2,  8,  4, 6,  15, 11, 1,  10, 9,  3,  14, 5,  0, 12, 7,
     1,  15, 13, 8, 10, 3,  7,  4,  12, 5,  6,  11, 0,  14, 9, 2,
     7,  11, 4,  1, 9,  12, 14, 2,  0,  6,  10, 13, 15, 3, 5,  8,
     2,  1,  14, 7, 4,  10, 8,  13, 15, 12, 9,  0,  3,  5, 6,  11}};

Bits to_bits(std::uint64_t v, int n) {
  Bits b{};
  for (int i = 0; i < n; ++i) b[i] = static_cast<int>((v >> (n - 1 - i)) & 1);
  return b;
}

std::uint64_t from_bits(const Bits& b, int n) {
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) v = (v << 1) | static_cast<unsigned>(b[i]);
  return v;
}

// subkeys[r][j], 16 rounds x 48 bits
using Subkeys = std::array<std::array<int, 48>, 16>;

Subkeys make_subkeys(std::uint64_t key64) {
  const Bits key = to_bits(key64, 64);
  std::array<int, 28> c{}, d{};
  for (int i = 0; i < 28; ++i) c[i] = key[PC1[i] - 1];
  for (int i = 0; i < 28; ++i) d[i] = key[PC1[28 + i] - 1];

  Subkeys out{};
  for (int r = 0; r < 16; ++r) {
    for (int s = 0; s < SHIFTS[r]; ++s) {
      const int c0 = c[0], d0 = d[0];
      for (int i = 0; i < 27; ++i) {
        c[i] = c[i + 1];
        d[i] = d[i + 1];
      }
      c[27] = c0;
      d[27] = d0;
    }
    std::array<int, 56> cd{};
    for (int i = 0; i < 28; ++i) {
      cd[i] = c[i];
      cd[28 + i] = d[i];
    }
    for (int j = 0; j < 48; ++j) out[r][j] = cd[PC2[j] - 1];
  }
  return out;
}

std::array<int, 32> feistel(const std::array<int, 32>& right,
                            const std::array<int, 48>& subkey) {
  std::array<int, 48> x{};
  for (int i = 0; i < 48; ++i) x[i] = right[EBIT[i] - 1] ^ subkey[i];

  std::array<int, 32> s{};
  for (int box = 0; box < 8; ++box) {
    const int* g = &x[box * 6];
    const int row = g[0] * 2 + g[5];
    const int col = g[1] * 8 + g[2] * 4 + g[3] * 2 + g[4];
    const int val = SBOXES[box][row * 16 + col];
    for (int i = 0; i < 4; ++i) s[box * 4 + i] = (val >> (3 - i)) & 1;
  }

  std::array<int, 32> out{};
  for (int i = 0; i < 32; ++i) out[i] = s[P32[i] - 1];
  return out;
}

std::uint64_t run(std::uint64_t block, const Subkeys& subkeys, bool reverse) {
  const Bits in = to_bits(block, 64);
  std::array<int, 32> l{}, r{};
  for (int i = 0; i < 32; ++i) {
    l[i] = in[IP[i] - 1];
    r[i] = in[IP[32 + i] - 1];
  }

  for (int round = 0; round < 16; ++round) {
    const auto& k = subkeys[reverse ? 15 - round : round];
    const auto f = feistel(r, k);
    std::array<int, 32> next{};
    for (int i = 0; i < 32; ++i) next[i] = l[i] ^ f[i];
    l = r;
    r = next;
  }

  Bits pre{};
  for (int i = 0; i < 32; ++i) {
    pre[i] = r[i];
    pre[32 + i] = l[i];
  }
  Bits out{};
  for (int i = 0; i < 64; ++i) out[i] = pre[IP_INV[i] - 1];
  return from_bits(out, 64);
}

}  // namespace

std::uint64_t encrypt(std::uint64_t plain, std::uint64_t key64) {
  return run(plain, make_subkeys(key64), false);
}

std::uint64_t decrypt(std::uint64_t cipher, std::uint64_t key64) {
  return run(cipher, make_subkeys(key64), true);
}

std::uint64_t widen_key(std::uint64_t key56) {
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) {
    const unsigned payload = (key56 >> (49 - 7 * i)) & 0x7F;
    unsigned ones = 0;
    for (int b = 0; b < 7; ++b) ones += (payload >> b) & 1;
    out = (out << 8) | (payload << 1) | ((ones + 1) & 1);
  }
  return out;
}

}  // namespace refdes
