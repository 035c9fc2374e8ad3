#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace cocharlab {

// Exact arithmetic everywhere: multiplicities, dimensions and table entries
// are arbitrary-precision integers, inner products are exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);
Int binomial(int n, int k);

// (sum parts)! / prod(parts_i!)
Int multinomial(std::span<const int> parts);

// True iff q is an integer; when so, *out receives the numerator.
bool rat_to_int(const Rat& q, Int* out);

}  // namespace cocharlab
