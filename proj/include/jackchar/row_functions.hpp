#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jackchar/jack.hpp"
#include "jackchar/laurent.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/report.hpp"

namespace jackchar {

using DiagramFunction = std::function<LaurentScalar(const Partition&)>;

// Convolution kernel (f_r) of a function F on Young diagrams:
//   F(lambda) = sum_{r >= 0} sum_{i_1 < ... < i_r} f_r(lambda_{i_1}, ..., lambda_{i_r}),
// the inner sum running over index subsets of the rows, so equal rows
// contribute once per position. Kernel orders are positive multisets
// (Partition keys); any tuple with a zero entry is outside the domain and
// contributes nothing. Copies share state; memo insertion is synchronized.
class RowKernel {
 public:
  // Kernel of the zero function.
  RowKernel();

  // Kernel recovered lazily from evaluations of source by the exact
  // triangular inversion
  //   f_l(lambda) = F(lambda) - sum over proper index subsets S of f(lambda_S).
  // The budgets bound the kernel orders and entries that may ever be
  // requested (BUDGET_EXCEEDED beyond them).
  static RowKernel from_function(DiagramFunction source, int max_rows, int max_entry);

  // Kernel with directly prescribed values f_{|X|}(X) = values(X).
  static RowKernel from_values(DiagramFunction values);

  // Kernel of the constant-1 function: f_0 = 1, every higher order vanishes.
  // Unit for the separate product.
  static RowKernel unit();

  // f_{|X|}(X) for a multiset X of positive integers. Memoized.
  const LaurentScalar& value(const Partition& entries) const;

  // F(lambda): the subset sum above over all 2^len(lambda) row index
  // subsets. When the kernel was recovered from a source the result is
  // cross-checked against a fresh source evaluation
  // (RECONSTRUCTION_MISMATCH on disagreement).
  LaurentScalar evaluate(const Partition& lambda) const;

  bool has_source() const;

  // Kernel of the difference of the underlying functions; inversion is
  // linear, so this is the order-wise difference of values. Lazy: the result
  // re-reads both operands on demand.
  RowKernel operator-(const RowKernel& other) const;

 private:
  struct State;
  explicit RowKernel(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

// Spelled-out aliases for the kernel accessors.
inline const LaurentScalar& kernel_value(const RowKernel& kernel, const Partition& entries) {
  return kernel.value(entries);
}
inline LaurentScalar evaluate_kernel(const RowKernel& kernel, const Partition& lambda) {
  return kernel.evaluate(lambda);
}

// Kernel of Ch_pi recovered from character evaluations. The table reference
// must outlive the kernel.
RowKernel ch_kernel(JackTable& jack, const Partition& pi, int max_rows, int max_entry);

// Separate product: the kernel whose order-n value at X sums, over ordered
// splittings of the positions of X into a pair of disjoint labeled
// sub-multisets (S, S^c), the products f(X_S) g(X_{S^c}). If F vanishes on
// |lambda| < a and G on |lambda| < b, the product function vanishes on
// |lambda| < a + b.
RowKernel separate_product(const RowKernel& f, const RowKernel& g);

// F^sym: sort the coordinates decreasingly, drop trailing zeros, evaluate F
// on the resulting diagram. Symmetric in its arguments by construction;
// negative coordinates are rejected (SIZE_MISMATCH).
LaurentScalar sym_extension(const DiagramFunction& f, const std::vector<int>& coords);

// Forward difference in coordinate j (0-based) acting through the symmetric
// extension: coords -> F^sym(..., coords_j + 1, ...) - F^sym(coords).
std::function<LaurentScalar(const std::vector<int>&)> delta_operator(DiagramFunction f, int j);

// k-fold difference in the first k coordinates:
//   sum_{e in {0,1}^k} (-1)^{k - |e|} F^sym(coords + e).
// Coordinates beyond coords are taken as zero. Order-independent because
// every evaluation goes through the symmetric extension.
LaurentScalar iterated_delta(const DiagramFunction& f, int k, std::vector<int> coords);

// Minimal d >= 0 with every probed kernel value of order r a Laurent
// polynomial of upper degree <= d - 2r. Probes every positive multiset with
// at most max_rows entries, each at most max_entry; orders beyond the
// budget are not inspected, so this is a probe-limited estimate.
int row_degree_probe(const RowKernel& kernel, int max_rows, int max_entry);

enum class ZeroVariant { Original, Alternative };

// Checks [A^{n+r-2k}] Delta_{lambda_1} ... Delta_{lambda_k} F^sym = 0 on the
// prescribed family of diagrams padded with zeros to k coordinates.
// Original (r >= 1): k = r over diagrams with at most r rows and
// |lambda| <= n + r - 2k - 1, plus every k > r with at most k rows and
// |lambda| <= n + r - 2k. Alternative (r >= 0): every k >= r with at most
// k rows and |lambda| <= n + r - 2k. Nonnegativity of the size bound caps k.
Report verify_Z3(const DiagramFunction& f, int n, int r, ZeroVariant variant);

// For F of degree at most d - 1 (order-r kernel values of upper degree
// <= d - 1 - 2r), [A^{d-2k}] Delta...Delta F^sym must vanish for every k and
// diagram. Checked for k <= max_k over all |lambda| <= max_size.
Report verify_small_degree_killed(const RowKernel& kernel, int d, int max_k, int max_size);

// kappa_dot^row(Ch_{pi_1}, ..., Ch_{pi_l}) vanishes on every diagram with
// |lambda| < |pi_1| + ... + |pi_l|: moments are kernels of characters of
// concatenated indices, cumulant products are separate products.
Report verify_vanishing_kappa_row(JackTable& jack, const std::vector<Partition>& pis);

// verify_vanishing_kappa_row over every multiset of nonempty partitions
// with total size <= max_size and at most max_parts entries.
Report scan_vanishing(JackTable& jack, int max_size, int max_parts);

// Every pairwise separate product of character kernels inherits the summed
// vanishing threshold: (K_pi (x) K_sigma)(lambda) = 0 for all
// |lambda| < |pi| + |sigma|, scanned over nonempty pairs with
// |pi| + |sigma| <= max_size.
Report verify_cool_vanishing(JackTable& jack, int max_size);

// Row function concentrated in one kernel order: f_arity = values (a
// symmetric function, given the entries sorted decreasingly), every other
// order zero.
struct ArityKernel {
  int arity = 0;
  std::function<LaurentScalar(const std::vector<int>&)> values;
};

// kappa^row(x_{t_1}, ..., x_{t_l}) for single-order kernels x_t drawn from
// the pool, computed two ways and compared on every |lambda| <= max_probe_size:
// once by the cumulant recursion (moments: kernels of pointwise products;
// products: separate), and once as the direct sum over l-tuples of row index
// subsets J^(i) of the prescribed arities whose intersection graph (an edge
// where J^(a) meets J^(b)) is connected, of prod_i values_i(rows at J^(i)).
Report verify_kernel_cumulant_formula(const std::vector<ArityKernel>& pool,
                                      const std::vector<int>& tuple, int max_probe_size);

// Counting bound behind the connected sum: for subsets J^(1), ..., J^(n) of
// a ground set with intersection graph G,
//   |J^(1) u ... u J^(n)| <= |J^(1)| + ... + |J^(n)| + c(G) - n,
// c = number of connected components. Exhausts every family of at most
// max_sets subsets of {0, ..., ground_size - 1} while the family count stays
// small, and samples seeded pseudo-random families beyond that.
Report verify_connected_components(int max_sets, int ground_size, int samples);

}  // namespace jackchar
