#ifndef MONOLIN_GF_HPP
#define MONOLIN_GF_HPP

#include <cstdint>
#include <vector>

#include "monolin/errors.hpp"

namespace monolin {

bool is_prime(long p);

/// Coefficient field GF(p).  32003 stands in for characteristic zero at desk
/// scale; 2 is exposed because linear resolutions can depend on it.
struct FieldSpec {
    long characteristic;

    explicit FieldSpec(long p = 32003) : characteristic(p) {
        if (!is_prime(p))
            throw domain_error("field characteristic must be prime, got " +
                               std::to_string(p));
    }

    bool operator==(const FieldSpec&) const = default;
};

/// Dense matrix over GF(p) supporting exact rank via Gaussian elimination
/// with full pivoting.
class GfMatrix {
public:
    GfMatrix(int rows, int cols, long p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, long value);
    long at(int r, int c) const { return data_[idx(r, c)]; }

    /// Rank over GF(p); destroys the matrix contents.
    int rank();

private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
               static_cast<size_t>(c);
    }

    int rows_;
    int cols_;
    long p_;
    std::vector<int32_t> data_;
};

} // namespace monolin

#endif
