#ifndef TRACEALG_SERIES_HPP
#define TRACEALG_SERIES_HPP

#include <vector>

#include "tracealg/derived_alphabet.hpp"
#include "tracealg/polynomial.hpp"

namespace tracealg {

/// Mobius polynomial P(theta): the alternating sum over independent
/// cliques C of the product of C's letters, constant term 1. Its inverse
/// is the characteristic series of M(A, theta).
TracePolynomial mobius_polynomial(const IndependenceAlphabet& alpha);

/// Same alternating clique sum for a derived alphabet (X, theta_X),
/// expanded into base-monoid traces. Cliques whose expanded length
/// exceeds maxlen are dropped; pass maxlen < 0 for no bound.
TracePolynomial mobius_polynomial(const DerivedAlphabet& X, int maxlen = -1);

/// Degree-n truncation of 1/P for a polynomial P with constant term 1,
/// by power-series inversion (S = 1 + (1-P) * S degree by degree).
TracePolynomial invert_series(const TracePolynomial& P, int n);

/// Sum of all traces of length <= n, computed as the truncated inverse
/// of the Mobius polynomial, never by enumeration.
TracePolynomial characteristic_series(const IndependenceAlphabet& alpha, int n);

/// Counts of abstract elements of M(X, theta_X) graded by expanded base
/// length, lengths 0..maxlen, via the length-weighted Mobius inversion.
std::vector<long long> derived_trace_counts(const DerivedAlphabet& X, int maxlen);

/// Graded dimensions d_1..d_n of L_K(A, theta), recovered from the
/// length generating series 1/p(t) through the identity
/// 1/p(t) = prod_m (1 - t^m)^(-d_m): Newton power sums of the reciprocal
/// roots of p, then a Mobius sum over divisors. Throws std::logic_error
/// if any d_m comes out negative or non-integral.
std::vector<long long> witt_dimensions(const IndependenceAlphabet& alpha, int n);

}  // namespace tracealg

#endif
