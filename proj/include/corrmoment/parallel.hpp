#pragma once

#include <cstdlib>
#include <omp.h>

namespace corrmoment {

// CORRMOMENT_THREADS caps OpenMP parallelism for every command.
inline void init_threads() {
    if (const char* env = std::getenv("CORRMOMENT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    }
}

// Compensated (Kahan) accumulator; reductions combine per-slot partials in
// a fixed serial order so parallel runs reproduce serial results exactly.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace corrmoment
