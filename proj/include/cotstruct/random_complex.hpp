#pragma once

#include <cstdint>

#include "cotstruct/complex.hpp"

namespace cotstruct {

/// Seeded pseudo-random bounded complex. The degree span is between 1 and
/// degree_span, ranks per degree run from 0 to max_rank, and each
/// differential is drawn from the solution space of d o d = 0 against the
/// one below it. Identical parameters give bit-identical complexes on every
/// platform.
struct RandomSpec {
  std::uint64_t seed = 1;
  int degree_span = 4;
  int max_rank = 2;
};

Complex random_complex(AlgebraPtr algebra, const RandomSpec& spec);

}  // namespace cotstruct
