#ifndef CLUSPAT_RANDGEN_HPP
#define CLUSPAT_RANDGEN_HPP

#include <cstdint>
#include <random>

#include "cluspat/pattern.hpp"

namespace cluspat {

// Seeded RNG with hand-rolled bounded sampling so that reports are
// byte-identical across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], inclusive, by rejection.
  int uniform_int(int lo, int hi);

  bool chance_percent(int percent) { return uniform_int(1, 100) <= percent; }

 private:
  std::mt19937_64 engine_;
};

// Random skew-symmetrizable matrix: skew-symmetric entries in
// [-max_entry, max_entry], optionally right-scaled by small positive column
// factors (rejected if scaling pushes entries past max_entry), optionally
// with one index fully disconnected (a zero column and row).
ExchangeMatrix random_exchange_matrix(RandomSource& rng, int rank, int max_entry,
                                      bool zero_column, bool scale_columns);

// Uniform i.i.d. labels in 1..rank; length uniform in [0, max_len].
Walk random_walk(RandomSource& rng, int rank, int max_len);

// Same sampling, but the walk truncates where the exact F-matrix recursion
// predicts an intractable F-polynomial: after each candidate step the
// support box prod_i (f_ij + 1) of every column must stay within box_cap.
// Wild exchange matrices thus keep walking up to the tractability frontier
// instead of blowing past the term guard.
Walk random_feasible_walk(RandomSource& rng, const ExchangeMatrix& b, int max_len, long box_cap);

}  // namespace cluspat

#endif
