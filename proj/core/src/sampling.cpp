#include "tstab/sampling.hpp"

#include <numeric>

namespace tstab {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

DerivedObject random_object(std::mt19937_64& rng, const SampleSpec& spec) {
  DerivedObject out;
  const auto summands = uniform(rng, 1, static_cast<std::int64_t>(spec.max_summands));
  for (std::int64_t s = 0; s < summands; ++s) {
    const auto shift = uniform(rng, -spec.shift_radius, spec.shift_radius);
    const auto mult = uniform(rng, 1, spec.max_multiplicity);
    const bool use_torsion = !spec.points.empty() && uniform(rng, 0, 2) == 0;
    if (use_torsion) {
      const auto& point = spec.points[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<std::int64_t>(spec.points.size()) - 1))];
      out.add(torsion(point, uniform(rng, 1, spec.max_length), shift), mult);
    } else {
      out.add(line(uniform(rng, -spec.degree_radius, spec.degree_radius), shift), mult);
    }
  }
  return out;
}

StableClass random_stable_class(std::mt19937_64& rng, const EllipticSampleSpec& spec) {
  const auto& point = spec.points[static_cast<std::size_t>(
      uniform(rng, 0, static_cast<std::int64_t>(spec.points.size()) - 1))];
  for (;;) {
    const auto rank = uniform(rng, 0, spec.max_rank);
    const auto degree = rank == 0 ? 1 : uniform(rng, -spec.degree_radius, spec.degree_radius);
    if (std::gcd(rank, degree) == 1) return StableClass::make(rank, degree, point);
  }
}

EllipticObject random_elliptic_object(std::mt19937_64& rng, const EllipticSampleSpec& spec) {
  EllipticObject out;
  const auto summands = uniform(rng, 1, static_cast<std::int64_t>(spec.max_summands));
  for (std::int64_t s = 0; s < summands; ++s) {
    const auto shift = uniform(rng, -spec.shift_radius, spec.shift_radius);
    out.add(ShiftedStable{random_stable_class(rng, spec), shift}, uniform(rng, 1, spec.max_multiplicity));
  }
  return out;
}

}  // namespace tstab
