#pragma once

// Complex roots of exact rational polynomials. The polynomial is first split
// into square-free factors exactly, so the numeric stage only ever sees
// simple roots; multiplicities come from the exact decomposition, not from
// clustering heuristics.

#include "nazeta/poly.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace nazeta {

// All complex roots of p with multiplicities, sorted by (real, imag).
// Each returned root z satisfies |p(z)| <= tol * sum_i |a_i| |z|^i evaluated
// on the square-free factor it came from; if iteration cannot reach that
// bound a numeric_error is thrown. Degree must be >= 1.
std::vector<std::pair<std::complex<double>, int>>
find_roots(const Poly& p, double tol = 1e-13);

} // namespace nazeta
