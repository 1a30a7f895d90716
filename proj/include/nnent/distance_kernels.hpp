#pragma once

#include <cstddef>
#include <string>

namespace nnent::kernels {

// All neighbor distances in this library are produced by one canonical
// formula: accumulate (x[d]-y[d])^2 over d = 0..m-1 in index order with one
// rounding per multiply and add, then take the IEEE square root. The batch
// kernels below vectorize across *candidate points* (one lane per candidate)
// so every lane performs the identical operation sequence and the results
// are bitwise equal to the scalar kernel. That property is what lets the
// accelerated k-NN index reproduce the brute-force oracle exactly; it is
// enforced by tests and must be preserved by any new variant.

enum class Simd { scalar, avx2, neon };

// out[i] = dist(query, points + i*m) for i in [0, count).
using BatchFn = void (*)(const double* query, const double* points, std::size_t count,
                         std::size_t m, double* out);

// Single-pair distance with the same accumulation order as the batch kernels.
double distance(const double* x, const double* y, std::size_t m);

void batch_scalar(const double* query, const double* points, std::size_t count, std::size_t m,
                  double* out);

// Best instruction set available on this CPU.
Simd detected();

// Kernel currently selected (detection result unless overridden).
Simd active();

// Force a specific variant, e.g. for equivalence tests or the NNENT_SIMD
// environment variable. Requesting an unsupported variant throws.
void force(Simd kind);

BatchFn batch();

const char* name(Simd kind);

}  // namespace nnent::kernels
