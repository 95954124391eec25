#include "madelung/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "madelung/error.hpp"

namespace madelung {

SpatialGrid::SpatialGrid(double q_min, double q_max, std::size_t n_points)
    : q_min_(q_min), q_max_(q_max), n_(n_points), h_(0.0) {
    if (!std::isfinite(q_min) || !std::isfinite(q_max) || !(q_min < q_max))
        throw ParameterError("grid requires finite q_min < q_max", {{"q_min", q_min}, {"q_max", q_max}});
    if (n_points < 3)
        throw SizingError("grid requires at least 3 points", {{"n_points", static_cast<double>(n_points)}});
    h_ = (q_max - q_min) / static_cast<double>(n_points - 1);
}

SpatialGrid SpatialGrid::symmetric(double half_length, std::size_t n_points) {
    return SpatialGrid(-half_length, half_length, n_points);
}

double SpatialGrid::point(std::size_t i) const noexcept {
    if (i + 1 == n_) return q_max_;
    return q_min_ + static_cast<double>(i) * h_;
}

std::vector<double> SpatialGrid::points() const {
    std::vector<double> q(n_);
    for (std::size_t i = 0; i < n_; ++i) q[i] = point(i);
    return q;
}

std::size_t SpatialGrid::nearest_index(double q) const noexcept {
    const double x = std::round((q - q_min_) / h_);
    if (!(x > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(x), n_ - 1);
}

namespace {

bool finite_value(double v) { return std::isfinite(v); }
bool finite_value(const std::complex<double>& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

template <typename T>
Field<T>::Field(SpatialGrid grid, std::vector<T> values, std::size_t edge_zone, bool infinite_walls)
    : grid_(grid), values_(std::move(values)), edge_zone_(edge_zone), infinite_walls_(infinite_walls) {
    if (values_.size() != grid_.size())
        throw SizingError("field length does not match grid",
                          {{"values", static_cast<double>(values_.size())}, {"n_points", static_cast<double>(grid_.size())}});
    const std::size_t n = values_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (finite_value(values_[i])) continue;
        if constexpr (std::is_same_v<T, double>) {
            if (infinite_walls_ && (i == 0 || i + 1 == n) && values_[i] == HUGE_VAL) continue;
        }
        throw DomainError("non-finite field sample at index " + std::to_string(i),
                          {{"index", static_cast<double>(i)}, {"q", grid_.point(i)}});
    }
}

template class Field<double>;
template class Field<std::complex<double>>;

std::size_t MaskedField::valid_count() const noexcept {
    return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), true));
}

RealField abs_squared(const ComplexField& psi) {
    std::vector<double> rho(psi.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(psi[i]);
    return RealField(psi.grid(), std::move(rho));
}

}  // namespace madelung
