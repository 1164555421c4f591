#include "monolin/gf.hpp"

#include <utility>

namespace monolin {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

GfMatrix::GfMatrix(int rows, int cols, long p)
    : rows_(rows), cols_(cols), p_(p),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

void GfMatrix::add(int r, int c, long value) {
    long v = (data_[idx(r, c)] + value) % p_;
    if (v < 0) v += p_;
    data_[idx(r, c)] = static_cast<int32_t>(v);
}

namespace {

long inverse_mod(long a, long p) {
    // extended Euclid
    long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return t;
}

} // namespace

int GfMatrix::rank() {
    int rank = 0;
    for (int step = 0; step < rows_ && step < cols_; ++step) {
        // full pivot search over the remaining submatrix
        int pr = -1, pc = -1;
        for (int r = step; r < rows_ && pr < 0; ++r)
            for (int c = step; c < cols_; ++c)
                if (data_[idx(r, c)] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pr != step)
            for (int c = 0; c < cols_; ++c)
                std::swap(data_[idx(step, c)], data_[idx(pr, c)]);
        if (pc != step)
            for (int r = 0; r < rows_; ++r)
                std::swap(data_[idx(r, step)], data_[idx(r, pc)]);

        long inv = inverse_mod(data_[idx(step, step)], p_);
        for (int r = step + 1; r < rows_; ++r) {
            long factor = data_[idx(r, step)];
            if (factor == 0) continue;
            long scale = factor * inv % p_;
            for (int c = step; c < cols_; ++c) {
                long v = data_[idx(r, c)] -
                         scale * static_cast<long>(data_[idx(step, c)]) % p_;
                data_[idx(r, c)] = static_cast<int32_t>(v < 0 ? v + p_ : v);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace monolin
