#pragma once

#include "oalat/bitset.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace oalat {

/// Weighted partition of a base interval: the discrete measure space that
/// carries the step-function lattice. Cells are laid out consecutively over
/// the interval; cell j has measure weight(j) and midpoint center(j).
///
/// Invariants: n_cells >= 1, all weights positive and finite, and the weights
/// sum to the interval length within 1e-12.
class CellGrid {
public:
    CellGrid(std::vector<double> weights, std::pair<double, double> base_interval);
    /// Base interval defaults to (0, sum of weights).
    explicit CellGrid(std::vector<double> weights);

    static std::shared_ptr<const CellGrid> uniform(std::size_t n_cells, double a = 0.0, double b = 1.0);

    std::size_t n_cells() const { return weights_.size(); }
    double weight(std::size_t j) const { return weights_[j]; }
    const std::vector<double>& weights() const { return weights_; }
    std::pair<double, double> base_interval() const { return interval_; }
    double center(std::size_t j) const { return centers_[j]; }
    double total_measure() const { return interval_.second - interval_.first; }

    /// Every cell split into two halves of equal measure.
    std::shared_ptr<const CellGrid> refined() const;

    bool operator==(const CellGrid& other) const {
        return weights_ == other.weights_ && interval_ == other.interval_;
    }
    bool operator!=(const CellGrid& other) const { return !(*this == other); }

private:
    std::vector<double> weights_;
    std::vector<double> centers_;
    std::pair<double, double> interval_;

    void validate_and_build();
};

using GridPtr = std::shared_ptr<const CellGrid>;

/// One real value per cell: an element of the step-function vector lattice.
/// Immutable after construction; copies are cheap (shared storage).
class StepElement {
public:
    StepElement(GridPtr grid, std::vector<double> values);

    static StepElement zero(GridPtr grid);
    static StepElement constant(GridPtr grid, double c);

    const CellGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t n_cells() const { return grid_->n_cells(); }
    double value(std::size_t j) const { return (*values_)[j]; }
    const std::vector<double>& values() const { return *values_; }

    /// Cells where the value is nonzero (exact comparison; values are stored,
    /// not computed).
    Bitset support() const;
    std::vector<std::size_t> support_cells() const;
    std::size_t support_size() const;
    bool is_zero() const { return support_size() == 0; }

private:
    GridPtr grid_;
    std::shared_ptr<const std::vector<double>> values_;
};

/// Throws GridMismatchError unless both elements live on equal grids.
void require_same_grid(const StepElement& x, const StepElement& y);
bool same_grid(const StepElement& x, const StepElement& y);

}  // namespace oalat
