#ifndef CLUSPAT_INITIAL_SEED_HPP
#define CLUSPAT_INITIAL_SEED_HPP

#include "cluspat/pattern.hpp"
#include "cluspat/semifield.hpp"

namespace cluspat {

// Moving the root across the edge t0 -k- t1.  Seen from t1, the walk w that
// reached t from t0 becomes k·w (the swap edge prepended).
struct RootSwap {
  int k;
  ExchangeMatrix b0;
  ExchangeMatrix b1;  // mu_k(b0)
};

RootSwap make_root_swap(const ExchangeMatrix& b, int k);

// Initial-seed mutation of C via the H-matrices:
//   C^{B1;t1}_t = (J_k + [-eps B]_+^{k.}) C^{B;t0}_t + H_t(eps)^{k.} B_t,
// with H_t(+) = H^{B;t0}_t (h_plus) and H_t(-) = H^{B1;t1}_t (h_minus).
IntMatrix initial_mutate_c(const IntMatrix& c_t, const IntMatrix& b_t, const RootSwap& swap,
                           int eps, const IntMatrix& h_plus, const IntMatrix& h_minus);

//   G^{B1;t1}_t = (J_k + [eps B]_+^{.k}) G^{B;t0}_t - B H_t(eps)^{k.}
IntMatrix initial_mutate_g(const IntMatrix& g_t, const RootSwap& swap, int eps,
                           const IntMatrix& h_plus, const IntMatrix& h_minus);

// Initial-seed mutation of the j-th F-polynomial (1-based j):
//   F^{B1;t1}_j = (1+y_k)^{g_kj} y_k^{-h_kj} F^{B;t0}_j(substituted arguments),
// the substitution putting y_k^{-1} in the k-th slot.  The rational
// intermediate must collapse to a genuine polynomial; CancellationFailure
// otherwise.
SparsePoly initial_mutate_fpoly(const PatternNode& node, const RootSwap& swap, int j);

// Initial-seed mutation of the F-matrix; both displayed variants
//   (J_k + [eps B]_+^{k.}) F + (eps G^B)^{k.}    - H^{-B}(eps)^{k.} - H^{B}(eps)^{k.}
//   (J_k + [-eps B]_+^{k.}) F + (eps G^{-B})^{k.} - H^{-B}(eps)^{k.} - H^{B}(eps)^{k.}
// are computed and must agree.  h_b_eps / h_negb_eps are the H-matrices for
// the chosen eps: rooted at t0 for eps = +1, at t1 (initial matrices B1 and
// -B1) for eps = -1.
IntMatrix initial_mutate_fmat(const IntMatrix& f_t, const RootSwap& swap, int eps,
                              const IntMatrix& g_b, const IntMatrix& g_negb,
                              const IntMatrix& h_b_eps, const IntMatrix& h_negb_eps);

// Unreduced forms that trade H for [-eps G]_+ (valid under sign-coherence).
IntMatrix initial_mutate_c_via_g(const IntMatrix& c_t, const IntMatrix& g_t, const IntMatrix& b_t,
                                 const RootSwap& swap, int eps);
IntMatrix initial_mutate_g_via_g(const IntMatrix& g_t, const RootSwap& swap, int eps);

// Reduced forms driven by the row sign of G (and of G^{-B} for F).
IntMatrix initial_c_signed(const IntMatrix& c_t, const IntMatrix& g_t, const RootSwap& swap);
IntMatrix initial_g_signed(const IntMatrix& g_t, const RootSwap& swap);
IntMatrix initial_fmat_signed(const IntMatrix& f_t, const IntMatrix& g_b, const IntMatrix& g_negb,
                              const RootSwap& swap);

// (G^{B;t0}_t)^T = C^{B_t^T;t}_{t0}: walks the reversed path from B_t^T and
// compares entry by entry.
IdentityReport duality_cg(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache = nullptr);
// (F^{B;t0}_t)^T = F^{B_t^T;t}_{t0}.
IdentityReport duality_f(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache = nullptr);

// The semifield automorphism rho_k of Q_sf(y1..yn) attached to the initial
// matrix B: y_k -> y_k^{-1}, y_j -> y_j y_k^{[b_kj]_+} (y_k + 1)^{-b_kj}.
SubtractionFreeRational rho_k_semifield(const SubtractionFreeRational& expr,
                                        const ExchangeMatrix& b, int k);

// The field automorphism over x1..xn, y1..yn: the same y-rules plus
// x_k -> (y_k prod x^{[b_.k]_+} + prod x^{[-b_.k]_+}) / ((y_k + 1) x_k).
SubtractionFreeRational rho_k_field(const SubtractionFreeRational& expr, const ExchangeMatrix& b,
                                    int k);

}  // namespace cluspat

#endif
