#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "propsim/core_stats.hpp"
#include "propsim/transform.hpp"

namespace propsim {

struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double std = 1.0;
};

/// Univariate Gaussian mixture, optionally followed by a transform.
struct MixtureSpec {
  std::vector<MixtureComponent> components;
  std::optional<TransformSpec> transform;

  /// Weights positive and summing to 1 (within 1e-12), stds positive.
  void validate() const;
};

namespace mixtures {
/// Equal-weight N(5, 1) + N(-1, 0.2).
MixtureSpec q1();
/// Equal-weight N(5, 1) + N(-2.5, 0.2).
MixtureSpec q2();
/// N(3, 1).
MixtureSpec q3();
/// Sign-preserving base-2 transform used for the proportional representation.
TransformSpec g();
}  // namespace mixtures

using Rng = std::mt19937_64;

/// Per draw: one uniform to pick the component (skipped for a single
/// component), then one normal draw; the transform is applied last.
std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, Rng& rng);
std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, std::uint64_t seed);

enum class Representation { uniform, proportional };

std::string_view representation_name(Representation r) noexcept;
std::optional<Representation> parse_representation(std::string_view name) noexcept;

struct DatasetConfig {
  std::uint64_t seed = 1;
  std::size_t n_per_category = 100;
  Representation representation = Representation::uniform;
};

/// Two-category dataset with features f1, f2 and labels A then B. Draw
/// order on a single stream: A/f1 (q1), A/f2 (q3), B/f1 (q2), B/f2 (q3).
/// The proportional representation applies g to every uniform value.
FeatureMatrix build_dataset(const DatasetConfig& cfg);

}  // namespace propsim
