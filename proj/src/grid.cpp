#include "oalat/grid.hpp"

#include "oalat/errors.hpp"

#include <cmath>

namespace oalat {

CellGrid::CellGrid(std::vector<double> weights, std::pair<double, double> base_interval)
    : weights_(std::move(weights)), interval_(base_interval) {
    validate_and_build();
}

CellGrid::CellGrid(std::vector<double> weights) : weights_(std::move(weights)) {
    double total = 0.0;
    for (double w : weights_) total += w;
    interval_ = {0.0, total};
    validate_and_build();
}

void CellGrid::validate_and_build() {
    if (weights_.empty()) throw ContractError("grid needs at least one cell");
    if (!(interval_.first < interval_.second)) throw ContractError("grid interval must satisfy a < b");
    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w <= 0.0) throw ContractError("grid weights must be positive and finite");
        total += w;
    }
    if (std::abs(total - (interval_.second - interval_.first)) > 1e-12)
        throw ContractError("grid weights must sum to the interval length");
    centers_.resize(weights_.size());
    double left = interval_.first;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        centers_[j] = left + 0.5 * weights_[j];
        left += weights_[j];
    }
}

GridPtr CellGrid::uniform(std::size_t n_cells, double a, double b) {
    std::vector<double> w(n_cells == 0 ? 1 : n_cells, (b - a) / static_cast<double>(n_cells == 0 ? 1 : n_cells));
    if (n_cells == 0) throw ContractError("grid needs at least one cell");
    return std::make_shared<const CellGrid>(std::move(w), std::pair<double, double>{a, b});
}

GridPtr CellGrid::refined() const {
    std::vector<double> w;
    w.reserve(2 * weights_.size());
    for (double v : weights_) {
        w.push_back(0.5 * v);
        w.push_back(0.5 * v);
    }
    return std::make_shared<const CellGrid>(std::move(w), interval_);
}

StepElement::StepElement(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)) {
    if (!grid_) throw ContractError("element needs a grid");
    if (values.size() != grid_->n_cells()) throw ContractError("element value count must match the grid");
    for (double v : values)
        if (!std::isfinite(v)) throw ContractError("element values must be finite");
    values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

StepElement StepElement::zero(GridPtr grid) {
    if (!grid) throw ContractError("element needs a grid");
    return StepElement(grid, std::vector<double>(grid->n_cells(), 0.0));
}

StepElement StepElement::constant(GridPtr grid, double c) {
    if (!grid) throw ContractError("element needs a grid");
    return StepElement(grid, std::vector<double>(grid->n_cells(), c));
}

Bitset StepElement::support() const {
    Bitset s(n_cells());
    for (std::size_t j = 0; j < n_cells(); ++j)
        if ((*values_)[j] != 0.0) s.set(j);
    return s;
}

std::vector<std::size_t> StepElement::support_cells() const {
    std::vector<std::size_t> cells;
    for (std::size_t j = 0; j < n_cells(); ++j)
        if ((*values_)[j] != 0.0) cells.push_back(j);
    return cells;
}

std::size_t StepElement::support_size() const {
    std::size_t c = 0;
    for (double v : *values_)
        if (v != 0.0) ++c;
    return c;
}

bool same_grid(const StepElement& x, const StepElement& y) {
    return x.grid_ptr() == y.grid_ptr() || x.grid() == y.grid();
}

void require_same_grid(const StepElement& x, const StepElement& y) {
    if (!same_grid(x, y)) throw GridMismatchError("elements live on different grids");
}

}  // namespace oalat
