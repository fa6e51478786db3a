#include "borel/linalg.hpp"

#include <cstdlib>

#include "borel/errors.hpp"

namespace borel {

namespace {

using int128 = __int128;

const int128 kOverflowGuard = int128(1) << 100;

int128 checked(int128 v) {
  if (v > kOverflowGuard || v < -kOverflowGuard)
    fail("internal", "exact elimination overflow; matrix too large for 128-bit minors");
  return v;
}

}  // namespace

int rank_exact(const std::vector<std::vector<long long>>& matrix) {
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows ? static_cast<int>(matrix[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<int128>> m(rows, std::vector<int128>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = matrix[i][j];

  int rank = 0;
  int128 prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = checked(m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

int rank_mod_p(const std::vector<std::vector<long long>>& matrix, long long p) {
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows ? static_cast<int>(matrix[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = ((matrix[i][j] % p) + p) % p;

  auto pow_mod = [&](long long base, long long exp) {
    long long r = 1 % p;
    base %= p;
    while (exp > 0) {
      if (exp & 1) r = r * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return r;
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long long inv = pow_mod(m[rank][col], p - 2);
    for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      long long f = m[i][col];
      for (int j = col; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace borel
