#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tstab/elliptic_object.hpp"
#include "tstab/p1.hpp"

namespace tstab {

struct SampleSpec {
  std::size_t max_summands = 6;
  std::int64_t degree_radius = 8;
  std::int64_t max_length = 4;
  std::int64_t shift_radius = 3;
  std::int64_t max_multiplicity = 3;
  std::vector<std::string> points = {"x", "y", "z"};
};

/// A nonzero random object with 1..max_summands summands.
DerivedObject random_object(std::mt19937_64& rng, const SampleSpec& spec = {});

struct EllipticSampleSpec {
  std::size_t max_summands = 5;
  std::int64_t max_rank = 4;
  std::int64_t degree_radius = 6;
  std::int64_t shift_radius = 2;
  std::int64_t max_multiplicity = 3;
  std::vector<std::string> points = {"a", "b", "c"};
};

StableClass random_stable_class(std::mt19937_64& rng, const EllipticSampleSpec& spec = {});
EllipticObject random_elliptic_object(std::mt19937_64& rng, const EllipticSampleSpec& spec = {});

}  // namespace tstab
