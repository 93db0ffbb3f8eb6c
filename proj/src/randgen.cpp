#include "cluspat/randgen.hpp"

#include <algorithm>

namespace cluspat {

int RandomSource::uniform_int(int lo, int hi) {
  if (lo > hi) throw InvalidArgument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<int>(v % span);
}

ExchangeMatrix random_exchange_matrix(RandomSource& rng, int rank, int max_entry,
                                      bool zero_column, bool scale_columns) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> scale(rank, 1);
    if (scale_columns)
      for (int j = 0; j < rank; ++j) scale[j] = rng.uniform_int(1, 3);
    // Column-scaled skew-symmetric base; pair bounds keep scaled entries
    // inside [-max_entry, max_entry].
    IntMatrix m(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j) {
        int bound = max_entry / std::max(scale[i], scale[j]);
        int v = rng.uniform_int(-bound, bound);
        m(i, j) = v * scale[j];
        m(j, i) = -v * scale[i];
      }
    if (zero_column) {
      int z = rng.uniform_int(1, rank);
      for (int i = 0; i < rank; ++i) {
        m(i, z - 1) = 0;
        m(z - 1, i) = 0;
      }
    }
    try {
      return ExchangeMatrix(std::move(m));
    } catch (const NotSkewSymmetrizable&) {
      continue;
    }
  }
  throw Error("random_exchange_matrix: rejection sampling failed to converge");
}

Walk random_walk(RandomSource& rng, int rank, int max_len) {
  int len = rng.uniform_int(0, max_len);
  Walk walk;
  walk.labels.reserve(len);
  for (int i = 0; i < len; ++i) walk.labels.push_back(rng.uniform_int(1, rank));
  return walk;
}

namespace {

struct FMatrixProbe {
  IntMatrix c, f, bt;

  explicit FMatrixProbe(const IntMatrix& b0)
      : c(IntMatrix::identity(b0.rows())), f(IntMatrix::zero(b0.rows(), b0.rows())), bt(b0) {}

  IntMatrix next_f(int l) const {
    int n = bt.rows();
    return f * j_matrix(n, l) +
           entrywise_max(col_restrict(positive_part(c), l) + f * col_restrict(positive_part(bt), l),
                         col_restrict(positive_part(-c), l) +
                             f * col_restrict(positive_part(-bt), l));
  }

  void step(int l) {
    IntMatrix f_next = next_f(l);
    c = c * (j_matrix(bt.rows(), l) + row_restrict(positive_part(bt), l)) +
        col_restrict(positive_part(-c), l) * bt;
    f = std::move(f_next);
    bt = mutate_matrix(bt, l);
  }
};

bool boxes_within(const IntMatrix& f, long cap) {
  for (int j = 0; j < f.cols(); ++j) {
    BigInt box(1);
    for (int i = 0; i < f.rows(); ++i) box *= f(i, j) + 1;
    if (box > cap) return false;
  }
  return true;
}

bool fmatrix_walk_within(const IntMatrix& b0, const Walk& walk, long cap, bool probe_extra) {
  FMatrixProbe probe(b0);
  for (int l : walk.labels) {
    if (!boxes_within(probe.next_f(l), cap)) return false;
    probe.step(l);
  }
  if (probe_extra)
    for (int l = 1; l <= b0.rows(); ++l)
      if (!boxes_within(probe.next_f(l), cap)) return false;
  return true;
}

// The identity battery walks more than the sampled path: one appended step
// per direction (involutions and the extension), the re-rooted walks k.w
// for every k, and the reversed walk from B_t^T (dualities).  All of them
// must stay under the cap.
bool battery_feasible(const ExchangeMatrix& b, const Walk& walk, long cap) {
  if (!fmatrix_walk_within(b.matrix(), walk, cap, true)) return false;
  for (int k = 1; k <= b.rank(); ++k)
    if (!fmatrix_walk_within(mutate_matrix(b.matrix(), k), walk.prepended(k), cap, false))
      return false;
  IntMatrix bt = b.matrix();
  for (int l : walk.labels) bt = mutate_matrix(bt, l);
  return fmatrix_walk_within(bt.transposed(), walk.reversed(), cap, false);
}

}  // namespace

Walk random_feasible_walk(RandomSource& rng, const ExchangeMatrix& b, int max_len, long box_cap) {
  Walk walk = random_walk(rng, b.rank(), max_len);
  while (!walk.labels.empty() && !battery_feasible(b, walk, box_cap)) walk.labels.pop_back();
  return walk;
}

}  // namespace cluspat
