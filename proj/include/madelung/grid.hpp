#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace madelung {

// Uniform 1D grid over [q_min, q_max], endpoints included.
class SpatialGrid {
public:
    SpatialGrid(double q_min, double q_max, std::size_t n_points);

    // Grid on [-half_length, half_length]; an odd point count puts q = 0 on a node.
    static SpatialGrid symmetric(double half_length, std::size_t n_points);

    double q_min() const noexcept { return q_min_; }
    double q_max() const noexcept { return q_max_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }
    double length() const noexcept { return q_max_ - q_min_; }

    double point(std::size_t i) const noexcept;
    std::vector<double> points() const;

    // True when [a, b] lies inside the closed grid interval.
    bool contains(double a, double b) const noexcept { return a >= q_min_ && b <= q_max_; }

    // Index of the node nearest to q, clamped to the grid.
    std::size_t nearest_index(double q) const noexcept;

    bool operator==(const SpatialGrid&) const = default;

private:
    double q_min_;
    double q_max_;
    std::size_t n_;
    double h_;
};

// Sampled field aligned to a grid. Values must be finite, with one exception:
// a real field may carry infinite walls, i.e. +inf in its first and last sample.
// edge_zone counts the samples at each end computed with reduced accuracy.
template <typename T>
class Field {
public:
    using value_type = T;

    Field(SpatialGrid grid, std::vector<T> values, std::size_t edge_zone = 0, bool infinite_walls = false);

    const SpatialGrid& grid() const noexcept { return grid_; }
    std::span<const T> values() const noexcept { return values_; }
    const T& operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t edge_zone() const noexcept { return edge_zone_; }
    bool infinite_walls() const noexcept { return infinite_walls_; }

    // Release the samples for in-place work on a copy.
    std::vector<T> to_vector() const { return values_; }

private:
    SpatialGrid grid_;
    std::vector<T> values_;
    std::size_t edge_zone_;
    bool infinite_walls_;
};

using RealField = Field<double>;
using ComplexField = Field<std::complex<double>>;

extern template class Field<double>;
extern template class Field<std::complex<double>>;

// Field with a validity mask; masked samples hold 0.
struct MaskedField {
    RealField field;
    std::vector<bool> valid;

    std::size_t valid_count() const noexcept;
};

template <typename F>
RealField sample_real(const SpatialGrid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.point(i));
    return RealField(grid, std::move(v));
}

template <typename F>
ComplexField sample_complex(const SpatialGrid& grid, F&& f) {
    std::vector<std::complex<double>> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.point(i));
    return ComplexField(grid, std::move(v));
}

RealField abs_squared(const ComplexField& psi);

}  // namespace madelung
