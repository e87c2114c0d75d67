#pragma once

#include "jackchar/jack.hpp"
#include "jackchar/laurent.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/report.hpp"

namespace jackchar {

// alpha-content of the box in column x, row y (1-indexed): A x - y / A.
LaurentScalar alpha_content(int x, int y);

// Ch_pi(lambda) at alpha = A^2:
//   Ch_pi(lambda) = A^{-(|pi|-len(pi))} binom(|lambda|-|pi|+m1, m1) z_pi
//                   theta_{pi 1^{|lambda|-|pi|}}(lambda),  m1 = m_1(pi);
// zero when |lambda| < |pi| (and one when pi is empty).
LaurentScalar ch_classical(JackTable& jack, const Partition& pi, const Partition& lambda);

// Closed content-sum forms for pi in {[], [1], [2], [3], [1,1]}
// (UNSUPPORTED_PARTITION otherwise). Independent of the Jack tables.
LaurentScalar ch_content_formula(const Partition& pi, const Partition& lambda);

// Ch_pi vanishes on diagrams smaller than |pi|.
Report verify_K3(JackTable& jack, const Partition& pi, int max_size);

// Laurent degree bound deg_A Ch_pi(lambda) <= |pi| - len(pi), scanned over
// all |lambda| <= max_size.
Report verify_K4(JackTable& jack, const Partition& pi, int max_size);

// On diagrams with at most m rows, (lambda_1..lambda_m) -> Ch_pi(lambda) is
// a polynomial of total degree |pi| whose top homogeneous part is
// A^{|pi|-len(pi)} p_pi(lambda_1..lambda_m). The polynomial is fitted on the
// unit-simplex lattice lambda_j = u_j + ... + u_m, sum(u) <= |pi| (exactly
// unisolvent for the degree), then checked on the held-out shell
// sum(u) = |pi| + 1 and against the expected top part.
Report verify_K2(JackTable& jack, const Partition& pi, int m);

}  // namespace jackchar
