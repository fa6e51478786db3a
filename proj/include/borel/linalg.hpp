#pragma once

#include <vector>

namespace borel {

// Rank of an integer matrix by fraction-free (Bareiss) elimination: every
// intermediate value is a minor of the input, so the arithmetic stays in
// integers and the result is exact. Intermediates are kept in 128-bit and
// guarded against overflow; the matrices handled here are boundary maps of
// complexes on a handful of vertices with entries in {-1,0,1}.
int rank_exact(const std::vector<std::vector<long long>>& matrix);

// Rank over the prime field GF(p).
int rank_mod_p(const std::vector<std::vector<long long>>& matrix, long long p);

}  // namespace borel
