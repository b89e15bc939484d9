#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "reflcat/ff/matrix.hpp"

namespace reflcat::ff {

// Univariate polynomials over F_p, coefficients from the constant term up.
// The zero polynomial is the empty vector.
using Poly = std::vector<Residue>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& m);
Poly make_monic(const PrimeField& f, const Poly& a);
Poly poly_gcd(const PrimeField& f, Poly a, Poly b);  // monic
Poly derivative(const PrimeField& f, const Poly& a);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m);

// Characteristic polynomial det(xI - A), monic.
Poly charpoly(const Matrix& a);
// f(A) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& a);

// The distinct monic irreducible factors, sorted by (degree, coefficients).
std::vector<Poly> irreducible_factors(const PrimeField& f, const Poly& a, std::mt19937_64& rng);

}  // namespace reflcat::ff
