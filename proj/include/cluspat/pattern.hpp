#ifndef CLUSPAT_PATTERN_HPP
#define CLUSPAT_PATTERN_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cluspat/intmat.hpp"
#include "cluspat/poly.hpp"

namespace cluspat {

// A path in the n-regular tree, as 1-based direction labels from the root.
// Immediate repeats are legal (mutations are involutive); CLI output flags
// them.
struct Walk {
  std::vector<int> labels;

  Walk() = default;
  Walk(std::initializer_list<int> l) : labels(l) {}
  explicit Walk(std::vector<int> l) : labels(std::move(l)) {}

  // "2,1,2"; empty string is the empty walk.
  static Walk parse(const std::string& text);

  std::size_t length() const { return labels.size(); }
  bool has_immediate_repeat() const;
  void validate(int rank) const;
  Walk prefix(std::size_t len) const;
  Walk appended(int label) const;
  Walk prepended(int label) const;
  Walk reversed() const;
  std::string to_text() const;
  bool operator==(const Walk& rhs) const { return labels == rhs.labels; }
};

// Everything the recursions maintain at one tree vertex: B_t, the tropical
// data C_t, G_t, the F-polynomial tuple, its degree matrix F_t, and the walk
// that got here from the root.
struct PatternNode {
  ExchangeMatrix initial_b;
  ExchangeMatrix b;
  IntMatrix c;
  IntMatrix g;
  IntMatrix f;
  std::vector<SparsePoly> fpolys;
  Walk walk;

  int rank() const { return initial_b.rank(); }
};

enum class VerifyLevel { fast, checked };

PatternNode initial_node(const ExchangeMatrix& b);

// Column/row sign of a sign-coherent column/row (1-based l); throws
// SignIncoherent on a mixed-sign or zero line.
int tropical_sign_column(const IntMatrix& m, int l);
int tropical_sign_row(const IntMatrix& m, int l);

// One final-seed mutation step of each component, in every variant the
// theory provides.  eps is +1 or -1 and never changes the result.
IntMatrix mutate_c(const PatternNode& node, int l, int eps);
IntMatrix mutate_g(const PatternNode& node, int l, int eps);
std::vector<SparsePoly> mutate_fpolys(const PatternNode& node, int l);
IntMatrix mutate_fmat_max(const PatternNode& node, int l);
// Variant that trades the entrywise max for the C-matrix of the -B pattern
// at the same vertex.
IntMatrix mutate_fmat_eps(const PatternNode& node, int l, int eps, const IntMatrix& c_neg);
// Reduced (tropical-sign) forms; identical results to the unreduced ones.
IntMatrix mutate_c_signed(const PatternNode& node, int l);
IntMatrix mutate_g_signed(const PatternNode& node, int l);
IntMatrix mutate_fmat_signed(const PatternNode& node, int l, const IntMatrix& c_neg);

// One full seed step by the designated formulas (unreduced, eps = +1).
PatternNode mutate_node(const PatternNode& node, int l);

// Memoized walk results, keyed by (initial exchange matrix, walk prefix).
// Safe for concurrent reads and inserts; equal queries yield equal nodes.
class WalkCache {
 public:
  std::shared_ptr<const PatternNode> find(const ExchangeMatrix& b, const Walk& walk) const;
  void store(std::shared_ptr<const PatternNode> node);

 private:
  static std::string key(const ExchangeMatrix& b, const Walk& walk);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const PatternNode>> nodes_;
};

// Walk from the initial node.  VerifyLevel::checked recomputes every step
// through all redundant formulas (both eps, reduced forms, the -B companion
// pattern) and asserts the full final-seed invariant battery; fast computes
// each component once.
PatternNode walk_node(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache = nullptr,
                      VerifyLevel level = VerifyLevel::fast);

// H-matrix by both routes (tropical degrees of the F-polynomials, and
// -[-G]_+); throws HMismatch if they disagree.
IntMatrix h_matrix(const PatternNode& node);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

// C^{-B} = C^B + F^B B_t, G^{-B} = G^B + B F^B, F^{-B} = F^B, where node_neg
// was walked from -B over the same walk.
IdentityReport negated_pattern_relations(const PatternNode& node, const PatternNode& node_neg);

// Strict equality of all five seed components (B_t, C, G, F, F-polynomials);
// periodicity in finite type can be detected with it but is never assumed.
bool seed_data_equal(const PatternNode& a, const PatternNode& b);

}  // namespace cluspat

#endif
