#include "spinform/field.hpp"

namespace spinform {

SurfaceGrid::SurfaceGrid(Chart chart, Grid2 grid) : chart_(std::move(chart)), grid_(grid) {
  frames_.resize(grid_.size());
  for (int j = 0; j < grid_.nv; ++j)
    for (int i = 0; i < grid_.nu; ++i) frames_[grid_.index(i, j)] = frame_at(chart_, grid_.u(i), grid_.v(j));
}

std::shared_ptr<const SurfaceGrid> SurfaceGrid::make(const Chart& chart, int nu, int nv) {
  return std::shared_ptr<const SurfaceGrid>(new SurfaceGrid(chart, Grid2(nu, nv, chart.domain)));
}

}  // namespace spinform
