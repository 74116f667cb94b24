#pragma once

#include <vector>

#include "cotstruct/chain_map.hpp"

namespace cotstruct {

/// Distinguished triangle U -> V -> W -> Sigma U. Triangles enter the system
/// through cone() (where W is the mapping cone of u, on the nose) or through
/// rotation of such a triangle; the three consecutive composites are always
/// null-homotopic.
struct Triangle {
  Complex u_obj, v_obj, w_obj;
  ChainMap u;  // U -> V, shift 0
  ChainMap v;  // V -> W, shift 0
  ChainMap w;  // W -> Sigma U, shift 1
};

/// Mapping cone of a shift-0 chain map f : U -> V:
/// W^n = V^n (+) U^{n+1}, d_W = [[d_V, f], [0, -d_U]], with the canonical
/// inclusion V -> W and projection W -> Sigma U.
Triangle cone(const ChainMap& f);

struct DirectSum {
  Complex sum;
  std::vector<ChainMap> injections;
  std::vector<ChainMap> projections;
};

/// Degree-wise concatenation with block-diagonal differential. The empty list
/// yields the zero complex.
DirectSum direct_sum(AlgebraPtr algebra, const std::vector<Complex>& parts);

}  // namespace cotstruct
