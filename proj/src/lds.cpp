#include "rankcpd/lds.hpp"

#include <bit>
#include <string>

#include "rankcpd/error.hpp"
#include "sobol_table.hpp"

namespace rankcpd::lds {
namespace {

constexpr double kScale = 1.0 / 4503599627370496.0;  // 2^-52

// Expands the direction numbers of one coordinate into 52 fixed-point
// values v_c = m_c << (51 - c), extending the initial m values with the
// recurrence given by the coordinate's primitive polynomial.
void expand_directions(int coordinate, std::uint64_t* v) {
    std::uint64_t m[kStateBits];
    if (coordinate == 0) {
        // First coordinate: van der Corput, all m_c = 1.
        for (int c = 0; c < kStateBits; ++c) m[c] = 1;
    } else {
        const auto& row = detail::kDirectionTable[coordinate - 1];
        const int s = row.degree;
        for (int c = 0; c < s; ++c) m[c] = row.m[c];
        for (int c = s; c < kStateBits; ++c) {
            std::uint64_t next = m[c - s] ^ (m[c - s] << s);
            for (int i = 1; i < s; ++i) {
                if ((row.poly >> (s - i)) & 1u) next ^= m[c - i] << i;
            }
            m[c] = next;
        }
    }
    for (int c = 0; c < kStateBits; ++c) v[c] = m[c] << (kStateBits - 1 - c);
}

}  // namespace

SobolGenerator::SobolGenerator(int dimension) : dimension_(dimension) {
    if (dimension < 1 || dimension > kMaxDimension) {
        throw InvalidArgument("Sobol dimension must be in [1, " +
                              std::to_string(kMaxDimension) + "], got " +
                              std::to_string(dimension));
    }
    direction_.resize(static_cast<std::size_t>(dimension) * kStateBits);
    state_.assign(static_cast<std::size_t>(dimension), 0);
    for (int j = 0; j < dimension; ++j) {
        expand_directions(j, direction_.data() + static_cast<std::size_t>(j) * kStateBits);
    }
}

void SobolGenerator::next(double* out) {
    if (index_ > 0) {
        // Gray-code step: flip the direction number indexed by the lowest
        // zero bit of the previous index.
        const int c = std::countr_one(index_ - 1);
        if (c >= kStateBits) {
            throw InvalidArgument("Sobol sequence exhausted the 52-bit index range");
        }
        for (int j = 0; j < dimension_; ++j) {
            state_[j] ^= direction_[static_cast<std::size_t>(j) * kStateBits + c];
        }
    }
    for (int j = 0; j < dimension_; ++j) {
        out[j] = static_cast<double>(state_[j]) * kScale;
    }
    ++index_;
}

void SobolGenerator::reset() {
    index_ = 0;
    state_.assign(state_.size(), 0);
}

Eigen::MatrixXd sobol_prefix(std::int64_t n, int dimension) {
    if (n < 1) throw InvalidArgument("Sobol prefix length must be positive");
    SobolGenerator gen(dimension);
    Eigen::MatrixXd points(n, dimension);
    std::vector<double> row(static_cast<std::size_t>(dimension));
    for (std::int64_t i = 0; i < n; ++i) {
        gen.next(row.data());
        for (int j = 0; j < dimension; ++j) points(i, j) = row[j];
    }
    return points;
}

Eigen::VectorXd sobol_point(std::int64_t index, int dimension) {
    if (index < 0) throw InvalidArgument("Sobol point index must be nonnegative");
    SobolGenerator gen(dimension);
    Eigen::VectorXd point(dimension);
    std::vector<double> row(static_cast<std::size_t>(dimension));
    for (std::int64_t i = 0; i <= index; ++i) gen.next(row.data());
    for (int j = 0; j < dimension; ++j) point(j) = row[j];
    return point;
}

}  // namespace rankcpd::lds
