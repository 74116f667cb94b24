#pragma once

#include <vector>

#include "cotstruct/minimal.hpp"

namespace cotstruct {

/// The generator set S of compact objects. The class R = { Sigma^i S : i < 0 }
/// stays implicit. Minimal models of the generators are precomputed since
/// every membership test runs against them.
class GeneratorSet {
 public:
  GeneratorSet(std::vector<Complex> generators, bool generating_flag);

  const std::vector<Complex>& generators() const { return gens_; }
  const std::vector<Complex>& minimized() const { return mins_; }
  std::size_t size() const { return gens_.size(); }
  bool generating_flag() const { return generating_; }
  const AlgebraPtr& algebra() const { return gens_.front().algebra(); }

  int lowest_degree() const;   // across all generators
  int highest_degree() const;
  int max_span() const;

 private:
  std::vector<Complex> gens_;
  std::vector<Complex> mins_;
  bool generating_;
};

}  // namespace cotstruct
