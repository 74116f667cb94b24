#pragma once

#include "cotstruct/chain_map.hpp"

namespace cotstruct {

/// Homotopy-equivalent minimal model: project o include = id on the model,
/// include o project is homotopic to the identity of the original.
struct MinimalModel {
  Complex model;
  ChainMap include;  // model -> original
  ChainMap project;  // original -> model
};

/// Gaussian elimination of the differential: repeatedly cancels a pair of
/// summands joined by an invertible entry (over an acyclic quiver these are
/// exactly the same-vertex entries with a nonzero trivial-path coefficient)
/// until none remain. Deterministic scan order, so the result is canonical.
MinimalModel minimal_model(const Complex& x);

}  // namespace cotstruct
