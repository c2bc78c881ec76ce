// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/derham/spaces.hpp"

#include "mpfeec/core/errors.hpp"

namespace mpfeec {

std::shared_ptr<const DeRhamSpaces>
DeRhamSpaces::build(std::shared_ptr<const MultipatchTopology> topo) {
  auto sp = std::make_shared<DeRhamSpaces>();
  sp->topo_ = std::move(topo);
  const auto &patches = sp->topo_->patches();
  sp->patches_.resize(patches.size());
  std::array<index_t, 3> off{0, 0, 0};
  for (std::size_t k = 0; k < patches.size(); ++k) {
    Patch &p = sp->patches_[k];
    for (int d = 0; d < 2; ++d) {
      p.primal[d] = UnivariateSpace(patches[k].knots[d]);
      p.derived[d] = p.primal[d].derivative_space();
      p.pdim[d] = p.primal[d].dim();
      p.ddim[d] = p.derived[d].dim();
    }
    p.offset = off;
    off[0] += static_cast<index_t>(p.pdim[0]) * p.pdim[1];
    off[1] += static_cast<index_t>(p.ddim[0]) * p.pdim[1] +
              static_cast<index_t>(p.pdim[0]) * p.ddim[1];
    off[2] += static_cast<index_t>(p.ddim[0]) * p.ddim[1];
  }
  sp->dims_ = off;
  return sp;
}

std::shared_ptr<const DeRhamSpaces> DeRhamSpaces::build(MultipatchTopology topo) {
  return build(std::make_shared<const MultipatchTopology>(std::move(topo)));
}

index_t DeRhamSpaces::patch_dim(int k, int level) const {
  const Patch &p = patches_[k];
  switch (level) {
  case 0:
    return static_cast<index_t>(p.pdim[0]) * p.pdim[1];
  case 1:
    return static_cast<index_t>(p.ddim[0]) * p.pdim[1] +
           static_cast<index_t>(p.pdim[0]) * p.ddim[1];
  case 2:
    return static_cast<index_t>(p.ddim[0]) * p.ddim[1];
  default:
    throw ValidationError("space level must be 0, 1 or 2");
  }
}

FemField::FemField(int lvl, std::shared_ptr<const DeRhamSpaces> sp)
    : level(lvl), spaces(std::move(sp)) {
  MPFEEC_REQUIRE(level >= 0 && level <= 2, "space level must be 0, 1 or 2");
  coeffs.assign(spaces->dim(level), 0.0);
}

FemField::FemField(int lvl, std::shared_ptr<const DeRhamSpaces> sp,
                   std::vector<double> c)
    : level(lvl), spaces(std::move(sp)), coeffs(std::move(c)) {
  MPFEEC_REQUIRE(level >= 0 && level <= 2, "space level must be 0, 1 or 2");
  MPFEEC_REQUIRE(static_cast<index_t>(coeffs.size()) == spaces->dim(level),
                 "coefficient vector length does not match space dimension");
}

} // namespace mpfeec
