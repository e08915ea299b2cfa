#include "propsim/datagen.hpp"

#include <cmath>

#include "propsim/error.hpp"

namespace propsim {

void MixtureSpec::validate() const {
  if (components.empty()) throw Error(ErrorCode::validation, "mixture has no components");
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) throw Error(ErrorCode::validation, "mixture weights must be positive");
    if (!(c.std > 0.0)) throw Error(ErrorCode::validation, "mixture stds must be positive");
    if (!std::isfinite(c.mean)) throw Error(ErrorCode::validation, "mixture mean not finite");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorCode::validation, "mixture weights must sum to 1");
}

namespace mixtures {
MixtureSpec q1() { return {{{0.5, 5.0, 1.0}, {0.5, -1.0, 0.2}}, std::nullopt}; }
MixtureSpec q2() { return {{{0.5, 5.0, 1.0}, {0.5, -2.5, 0.2}}, std::nullopt}; }
MixtureSpec q3() { return {{{1.0, 3.0, 1.0}}, std::nullopt}; }
TransformSpec g() { return TransformSpec::signed_proportional(2.0); }
}  // namespace mixtures

std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, Rng& rng) {
  spec.validate();
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t c = 0;
    if (spec.components.size() > 1) {
      const double u = pick(rng);
      double acc = 0.0;
      for (c = 0; c + 1 < spec.components.size(); ++c) {
        acc += spec.components[c].weight;
        if (u < acc) break;
      }
    }
    const auto& comp = spec.components[c];
    // A fresh distribution per draw keeps the stream free of cached state.
    std::normal_distribution<double> normal(comp.mean, comp.std);
    double v = normal(rng);
    if (spec.transform) v = apply_transform(*spec.transform, v);
    out.push_back(v);
  }
  return out;
}

std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_mixture(spec, n, rng);
}

std::string_view representation_name(Representation r) noexcept {
  return r == Representation::uniform ? "uniform" : "proportional";
}

std::optional<Representation> parse_representation(std::string_view name) noexcept {
  if (name == "uniform") return Representation::uniform;
  if (name == "proportional") return Representation::proportional;
  return std::nullopt;
}

FeatureMatrix build_dataset(const DatasetConfig& cfg) {
  if (cfg.n_per_category < 2)
    throw Error(ErrorCode::validation, "n_per_category must be at least 2");
  const std::size_t n = cfg.n_per_category;
  Rng rng(cfg.seed);
  const auto a1 = sample_mixture(mixtures::q1(), n, rng);
  const auto a2 = sample_mixture(mixtures::q3(), n, rng);
  const auto b1 = sample_mixture(mixtures::q2(), n, rng);
  const auto b2 = sample_mixture(mixtures::q3(), n, rng);

  const bool proportional = cfg.representation == Representation::proportional;
  const TransformSpec g = mixtures::g();
  auto value = [&](double v) { return proportional ? apply_transform(g, v) : v; };

  std::vector<double> values;
  values.reserve(4 * n);
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    values.push_back(value(a1[i]));
    values.push_back(value(a2[i]));
    labels.emplace_back("A");
  }
  for (std::size_t i = 0; i < n; ++i) {
    values.push_back(value(b1[i]));
    values.push_back(value(b2[i]));
    labels.emplace_back("B");
  }
  return FeatureMatrix(2 * n, {"f1", "f2"}, std::move(values), std::move(labels));
}

}  // namespace propsim
