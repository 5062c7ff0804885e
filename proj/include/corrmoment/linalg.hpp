// linalg.hpp -- dense symmetric matrix kernels (row-major flat storage).
//
// The OpenMP variants split rows across threads; every row is produced by
// exactly one thread in fixed arithmetic order, so serial and parallel
// results are bit-identical.

#pragma once

#include <cstdint>
#include <vector>

namespace corrmoment {

void sym_matvec_serial(int n, const double* m, const double* x, double* y);
void sym_matvec(int n, const double* m, const double* x, double* y);

void matmul_serial(int n, const double* a, const double* b, double* c);
void matmul(int n, const double* a, const double* b, double* c);

double frobenius_norm(const double* m, std::size_t len);

double trace(int n, const double* m);

struct PowerIterResult {
    double value = 0.0;      // largest |eigenvalue|
    int iterations = 0;
    double residual = 0.0;   // ||Hv - lambda v|| / |lambda| at the winner
};

// Thrown when the iteration fails to reach `tol`; carries the best estimate.
struct NormConvergenceError {
    PowerIterResult best;
};

// Largest |eigenvalue| of a symmetric matrix by power iteration on H^2
// (sign recovered from the Rayleigh quotient). Deterministic: fixed
// alternating-sign start vector plus one seeded random restart; the larger
// converged estimate wins.
PowerIterResult sym_spectral_norm(int n, const double* m, double tol = 1e-8,
                                  int max_iter = 50000,
                                  std::uint64_t restart_seed = 0x5eed);

}  // namespace corrmoment
