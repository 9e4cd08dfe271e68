#pragma once

#include <vector>

#include "tlq/generator_word.hpp"
#include "tlq/tl_morphism.hpp"

namespace tlq {

/// Positive-crossing word moving the left n strands past the right m strands.
GeneratorWord braiding_word(int n, int m);
/// c_{n,m}: (n+m) -> (m+n), the resolved braiding block.
TLMorphism braiding_tl(int n, int m, const Field& field);
/// (id_n ⊗ d_n)(c_{n,n} ⊗ id_n)(id_n ⊗ b_n)
TLMorphism curl_tl(int n, const Field& field);
/// theta_n = (-1)^n curl_n
TLMorphism twist_tl(int n, const Field& field);
/// b_n: 0 -> 2n, nested cups.
TLMorphism coev_tl(int n, const Field& field);
/// d_n: 2n -> 0, nested caps.
TLMorphism ev_tl(int n, const Field& field);

/// Jones-Wenzl idempotent f_k by the Wenzl recursion. In root mode throws
/// PoleAtRoot when some Delta_j (j < k) vanishes, i.e. when k >= r.
const TLMorphism& jones_wenzl(int k, const Field& field);
/// Delta_j = (-1)^j [j+1]_q: Delta_0 = 1, Delta_1 = delta.
Scalar chebyshev_delta(int j, const Field& field);

/// f_{n_1} ⊗ ... ⊗ f_{n_m}; the empty list gives the empty diagram.
TLMorphism jw_tensor(const std::vector<int>& colors, const Field& field);

/// tr_q(f) = d_n c_{n,n} (theta_n f ⊗ id_n) b_n, evaluated as (-1)^n times the
/// planar closure of f.
Scalar closure_trace(const TLMorphism& f);
/// The same scalar computed from the full composite (slow; used as a check).
Scalar closure_trace_composite(const TLMorphism& f);
/// Planar closure of a single diagram: number of loops formed.
int closure_loops(const SimpleDiagram& d);

}  // namespace tlq
