#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace rankcpd::lds {

// Highest supported dimension of the direction-number table.
inline constexpr int kMaxDimension = 50;

// Bits of the fixed-point generator state. Coordinates are emitted as
// state / 2^52, so every value is an exact dyadic rational in [0, 1).
inline constexpr int kStateBits = 52;

// Sobol sequence generator using the Gray-code increment. The sequence
// starts at the all-zeros point (index 0) so that every prefix of length
// 2^m is dyadically balanced in each coordinate.
//
// A generator instance is single-owner; concurrent generation requires
// independent instances.
class SobolGenerator {
public:
    explicit SobolGenerator(int dimension);

    int dimension() const { return dimension_; }
    std::uint64_t index() const { return index_; }

    // Writes the next point into out[0..dimension) and advances the index.
    void next(double* out);

    // Resets to index 0 (the all-zeros point).
    void reset();

private:
    int dimension_;
    std::uint64_t index_ = 0;
    // direction_[j * kStateBits + c] is direction number c of coordinate j,
    // as a kStateBits-bit fixed-point value.
    std::vector<std::uint64_t> direction_;
    std::vector<std::uint64_t> state_;
};

// First n points of the d-dimensional sequence, one point per row.
Eigen::MatrixXd sobol_prefix(std::int64_t n, int dimension);

// Random access: the point at a given index, equal to
// sobol_prefix(index + 1, d).row(index).
Eigen::VectorXd sobol_point(std::int64_t index, int dimension);

}  // namespace rankcpd::lds
