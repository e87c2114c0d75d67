#pragma once

#include <map>
#include <vector>

#include "jackchar/partition.hpp"

namespace jackchar {

// Transition tables between the power-sum and monomial bases of degree-n
// symmetric functions, indexed by partitions_of(n) order (dominance-
// compatible, [n] first). p_pi expands over monomials m_mu with mu above pi
// in dominance, so p_in_m rows have support at indices <= own index, with
// diagonal entry prod_u m_u(pi)!.
struct PowersumTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  // row i: p_{parts[i]} = sum_c p_in_m[i][c] * m_{parts[c]}  (integer, sparse)
  std::vector<std::map<int, Integer>> p_in_m;
  // row i: m_{parts[i]} = sum_j m_in_p[i][j] * p_{parts[j]}  (rational, dense)
  std::vector<std::vector<Rational>> m_in_p;
};

// Memoized per n; the returned reference stays valid for the process.
const PowersumTables& powersum_tables(int n);

}  // namespace jackchar
