#pragma once

#include <vector>

#include "jackchar/rational.hpp"

// Reference implementations kept deliberately independent of the library
// code paths they are used to check.
namespace oracle {

using jackchar::Integer;
using jackchar::Rational;

// Number of integer partitions of n (Euler pentagonal-free dynamic program).
Integer partition_count(int n);

// Number of set partitions of {1..n} (Bell triangle).
Integer bell_number(int n);

// Number of noncrossing set partitions of {1..n} (Catalan number).
Integer catalan(int n);

// Irreducible symmetric group character chi^lambda(pi) via border-strip
// removal on beta-sets. Both arguments are partitions of the same n.
Integer sym_character(const std::vector<int>& lambda, const std::vector<int>& pi);

// Product of the hook lengths of lambda.
Integer hook_product(const std::vector<int>& lambda);

}  // namespace oracle
