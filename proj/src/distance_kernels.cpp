#include "nnent/distance_kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#include "nnent/errors.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NNENT_X86 1
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#define NNENT_NEON 1
#include <arm_neon.h>
#endif

namespace nnent::kernels {

double distance(const double* x, const double* y, std::size_t m) {
    double acc = 0.0;
    for (std::size_t d = 0; d < m; ++d) {
        const double t = x[d] - y[d];
        acc += t * t;
    }
    return std::sqrt(acc);
}

void batch_scalar(const double* query, const double* points, std::size_t count, std::size_t m,
                  double* out) {
    for (std::size_t i = 0; i < count; ++i) out[i] = distance(query, points + i * m, m);
}

#ifdef NNENT_X86
__attribute__((target("avx2"))) static void batch_avx2(const double* query, const double* points,
                                                       std::size_t count, std::size_t m,
                                                       double* out) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const double* p0 = points + (i + 0) * m;
        const double* p1 = points + (i + 1) * m;
        const double* p2 = points + (i + 2) * m;
        const double* p3 = points + (i + 3) * m;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < m; ++d) {
            const __m256d vq = _mm256_set1_pd(query[d]);
            const __m256d vp = _mm256_set_pd(p3[d], p2[d], p1[d], p0[d]);
            const __m256d t = _mm256_sub_pd(vq, vp);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(t, t));
        }
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(acc));
    }
    for (; i < count; ++i) out[i] = distance(query, points + i * m, m);
}
#endif

#ifdef NNENT_NEON
static void batch_neon(const double* query, const double* points, std::size_t count,
                       std::size_t m, double* out) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const double* p0 = points + (i + 0) * m;
        const double* p1 = points + (i + 1) * m;
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t d = 0; d < m; ++d) {
            const float64x2_t vq = vdupq_n_f64(query[d]);
            double lanes[2] = {p0[d], p1[d]};
            const float64x2_t vp = vld1q_f64(lanes);
            const float64x2_t t = vsubq_f64(vq, vp);
            acc = vaddq_f64(acc, vmulq_f64(t, t));
        }
        vst1q_f64(out + i, vsqrtq_f64(acc));
    }
    for (; i < count; ++i) out[i] = distance(query, points + i * m, m);
}
#endif

namespace {

Simd detect_impl() {
#ifdef NNENT_X86
    if (__builtin_cpu_supports("avx2")) return Simd::avx2;
#endif
#ifdef NNENT_NEON
    return Simd::neon;
#endif
    return Simd::scalar;
}

Simd initial_choice() {
    Simd best = detect_impl();
    if (const char* env = std::getenv("NNENT_SIMD")) {
        std::string v(env);
        if (v == "scalar") return Simd::scalar;
        if (v == "avx2" && best == Simd::avx2) return Simd::avx2;
        if (v == "neon" && best == Simd::neon) return Simd::neon;
    }
    return best;
}

std::atomic<Simd> g_active{initial_choice()};

}  // namespace

Simd detected() { return detect_impl(); }

Simd active() { return g_active.load(std::memory_order_relaxed); }

void force(Simd kind) {
    if (kind != Simd::scalar && kind != detect_impl())
        throw DomainError(std::string("simd variant not supported on this cpu: ") + name(kind));
    g_active.store(kind, std::memory_order_relaxed);
}

BatchFn batch() {
    switch (active()) {
#ifdef NNENT_X86
        case Simd::avx2:
            return &batch_avx2;
#endif
#ifdef NNENT_NEON
        case Simd::neon:
            return &batch_neon;
#endif
        default:
            return &batch_scalar;
    }
}

const char* name(Simd kind) {
    switch (kind) {
        case Simd::avx2:
            return "avx2";
        case Simd::neon:
            return "neon";
        default:
            return "scalar";
    }
}

}  // namespace nnent::kernels
