// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_DERHAM_SPACES_HPP
#define MPFEEC_DERHAM_SPACES_HPP

#include <memory>
#include <vector>

#include "mpfeec/geometry/topology.hpp"
#include "mpfeec/linalg/csr.hpp"
#include "mpfeec/splines/space.hpp"

namespace mpfeec {

/// Per-patch tensor-product de Rham spaces
///   V0 = P x P,  V1 = (D x P, P x D),  V2 = D x D
/// with P the primal (degree p) and D the derived (degree p-1) univariate
/// space per direction, and a flat global DOF numbering: patches in order,
/// lexicographic within a patch with the second index fastest, component
/// d = 1 before d = 2 for V1.
class DeRhamSpaces {
public:
  struct Patch {
    std::array<UnivariateSpace, 2> primal;
    std::array<UnivariateSpace, 2> derived;
    std::array<int, 2> pdim; // primal dims (n+1)
    std::array<int, 2> ddim; // derived dims (n)
    std::array<index_t, 3> offset; // global offset per level
  };

  static std::shared_ptr<const DeRhamSpaces>
  build(std::shared_ptr<const MultipatchTopology> topo);
  static std::shared_ptr<const DeRhamSpaces> build(MultipatchTopology topo);

  const MultipatchTopology &topology() const { return *topo_; }
  std::shared_ptr<const MultipatchTopology> topology_ptr() const { return topo_; }

  int num_patches() const { return static_cast<int>(patches_.size()); }
  int degree() const { return topo_->degree(); }
  const Patch &patch(int k) const { return patches_[k]; }

  index_t dim(int level) const { return dims_[level]; }

  index_t idx0(int k, int i1, int i2) const {
    const Patch &p = patches_[k];
    return p.offset[0] + static_cast<index_t>(i1) * p.pdim[1] + i2;
  }
  index_t idx1(int k, int d, int i1, int i2) const {
    const Patch &p = patches_[k];
    if (d == 1)
      return p.offset[1] + static_cast<index_t>(i1) * p.pdim[1] + i2;
    return p.offset[1] + static_cast<index_t>(p.ddim[0]) * p.pdim[1] +
           static_cast<index_t>(i1) * p.ddim[1] + i2;
  }
  index_t idx2(int k, int i1, int i2) const {
    const Patch &p = patches_[k];
    return p.offset[2] + static_cast<index_t>(i1) * p.ddim[1] + i2;
  }

  index_t patch_dim(int k, int level) const;

private:
  std::shared_ptr<const MultipatchTopology> topo_;
  std::vector<Patch> patches_;
  std::array<index_t, 3> dims_{0, 0, 0};
};

/// Coefficient vector tagged with its space level and domain.
struct FemField {
  int level = 0;
  std::shared_ptr<const DeRhamSpaces> spaces;
  std::vector<double> coeffs;

  FemField() = default;
  FemField(int lvl, std::shared_ptr<const DeRhamSpaces> sp);
  FemField(int lvl, std::shared_ptr<const DeRhamSpaces> sp,
           std::vector<double> c);
};

} // namespace mpfeec

#endif
