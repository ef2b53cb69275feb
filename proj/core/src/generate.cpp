#include "stretchalign/generate.hpp"

#include <cmath>
#include <stdexcept>

namespace stretchalign {

namespace {

double standard_normal(SplitMix64& rng) {
  // Sum of twelve unit uniforms, centred: mean 0, variance 1, support +-6.
  // Needs no transcendentals, so it is bit-stable across platforms.
  double acc = 0.0;
  for (int k = 0; k < 12; ++k) acc += rng.next_unit();
  return acc - 6.0;
}

std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t span) {
  if (span == 0) return rng.next();  // full 64-bit range
  const std::uint64_t threshold = (0 - span) % span;  // 2^64 mod span
  for (;;) {
    const std::uint64_t r = rng.next();
    if (r >= threshold) return r % span;
  }
}

// exp(-x) for x >= 0 without libm: the integer part via powers of the double
// nearest to 1/e, the fractional part via a Taylor sum. Every operation is
// correctly rounded, so the result is platform-stable.
double exp_neg(double x) {
  constexpr double kInvE = 0x1.78b56362cef38p-2;
  const auto whole = static_cast<std::int64_t>(x);
  const double frac = x - static_cast<double>(whole);
  double int_part = 1.0;
  for (std::int64_t k = 0; k < whole; ++k) int_part *= kInvE;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 30; ++k) {
    term *= -frac / k;
    sum += term;
  }
  return int_part * sum;
}

std::size_t poisson_draw(SplitMix64& rng, double exp_neg_lambda) {
  std::size_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.next_unit();
  } while (p > exp_neg_lambda);
  return k - 1;
}

Symbol quantize(double x, std::size_t alphabet_size) {
  const double rounded = std::floor(x + 0.5);  // round half up
  if (!(rounded > 0.0)) return 0;
  const double top = static_cast<double>(alphabet_size - 1);
  if (rounded >= top) return static_cast<Symbol>(alphabet_size - 1);
  return static_cast<Symbol>(rounded);
}

void validate(const DistributionSpec& spec) {
  if (spec.length < 1) throw std::invalid_argument("generate: length must be >= 1");
  switch (spec.kind) {
    case DistributionSpec::Kind::gauss:
      if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma) || !std::isfinite(spec.mean)) {
        throw std::invalid_argument("generate: gauss needs finite mean and sigma > 0");
      }
      break;
    case DistributionSpec::Kind::rayleigh:
      if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
        throw std::invalid_argument("generate: rayleigh needs sigma > 0");
      }
      break;
    case DistributionSpec::Kind::poisson:
      if (!(spec.lambda > 0.0) || spec.lambda > 100.0) {
        throw std::invalid_argument("generate: poisson needs lambda in (0, 100]");
      }
      break;
    case DistributionSpec::Kind::uniform:
      if (spec.lo > spec.hi) {
        throw std::invalid_argument("generate: uniform needs lo <= hi");
      }
      break;
  }
}

double draw(SplitMix64& rng, const DistributionSpec& spec, double exp_neg_lambda) {
  switch (spec.kind) {
    case DistributionSpec::Kind::gauss:
      return spec.mean + spec.sigma * standard_normal(rng);
    case DistributionSpec::Kind::uniform: {
      const std::uint64_t span =
          static_cast<std::uint64_t>(spec.hi - spec.lo) + 1;  // may wrap to 0 = full range
      return static_cast<double>(
          spec.lo + static_cast<std::int64_t>(uniform_below(rng, span)));
    }
    case DistributionSpec::Kind::rayleigh: {
      const double g1 = standard_normal(rng);
      const double g2 = standard_normal(rng);
      return spec.sigma * std::sqrt(g1 * g1 + g2 * g2);
    }
    case DistributionSpec::Kind::poisson:
      return static_cast<double>(poisson_draw(rng, exp_neg_lambda));
  }
  throw std::logic_error("generate: unknown distribution kind");
}

}  // namespace

DistributionSpec DistributionSpec::gauss(double mean, double sigma, std::size_t length,
                                         std::uint64_t seed) {
  DistributionSpec s;
  s.kind = Kind::gauss;
  s.mean = mean;
  s.sigma = sigma;
  s.length = length;
  s.seed = seed;
  return s;
}

DistributionSpec DistributionSpec::uniform(std::int64_t lo, std::int64_t hi,
                                           std::size_t length, std::uint64_t seed) {
  DistributionSpec s;
  s.kind = Kind::uniform;
  s.lo = lo;
  s.hi = hi;
  s.length = length;
  s.seed = seed;
  return s;
}

DistributionSpec DistributionSpec::rayleigh(double sigma, std::size_t length,
                                            std::uint64_t seed) {
  DistributionSpec s;
  s.kind = Kind::rayleigh;
  s.sigma = sigma;
  s.length = length;
  s.seed = seed;
  return s;
}

DistributionSpec DistributionSpec::poisson(double lambda, std::size_t length,
                                           std::uint64_t seed) {
  DistributionSpec s;
  s.kind = Kind::poisson;
  s.lambda = lambda;
  s.length = length;
  s.seed = seed;
  return s;
}

Sequence generate(const DistributionSpec& spec, std::size_t alphabet_size) {
  validate(spec);
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabetSize) {
    throw std::invalid_argument("generate: invalid alphabet size");
  }
  SplitMix64 rng{spec.seed};
  const double exp_neg_lambda =
      spec.kind == DistributionSpec::Kind::poisson ? exp_neg(spec.lambda) : 0.0;
  Sequence out;
  out.reserve(spec.length);
  for (std::size_t k = 0; k < spec.length; ++k) {
    out.push_back(quantize(draw(rng, spec, exp_neg_lambda), alphabet_size));
  }
  return out;
}

Sequence generate_excluding(const DistributionSpec& spec, Symbol excluded,
                            std::size_t alphabet_size) {
  validate(spec);
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabetSize) {
    throw std::invalid_argument("generate: invalid alphabet size");
  }
  SplitMix64 rng{spec.seed};
  const double exp_neg_lambda =
      spec.kind == DistributionSpec::Kind::poisson ? exp_neg(spec.lambda) : 0.0;
  Sequence out;
  out.reserve(spec.length);
  constexpr std::size_t kMaxRedraws = 1'000'000;
  for (std::size_t k = 0; k < spec.length; ++k) {
    Symbol value = excluded;
    std::size_t attempts = 0;
    while (value == excluded) {
      if (++attempts > kMaxRedraws) {
        throw std::runtime_error("generate_excluding: distribution collapses onto the excluded symbol");
      }
      value = quantize(draw(rng, spec, exp_neg_lambda), alphabet_size);
    }
    out.push_back(value);
  }
  return out;
}

Sequence corrupt(const Sequence& host, const InsertionSpec& ins) {
  if (ins.position > host.size()) {
    throw std::invalid_argument("corrupt: insertion position beyond host length");
  }
  if (ins.truncate_to > host.size() + ins.count) {
    throw std::invalid_argument("corrupt: truncate_to exceeds the extended length");
  }
  Sequence out = host;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(ins.position), ins.count, ins.value);
  out.resize(ins.truncate_to);
  return out;
}

}  // namespace stretchalign
