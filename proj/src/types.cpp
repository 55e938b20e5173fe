#include "renorm/types.hpp"

#include <cmath>

namespace renorm {

double pair(const Functional& f, const Vector& x) {
  if (f.dim() != x.dim())
    throw DimensionError("pairing length mismatch: " + std::to_string(f.dim()) +
                         " vs " + std::to_string(x.dim()));
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += f[i] * x[i];
  return s;
}

Vector unit_vector(std::size_t n, std::size_t dim) {
  Vector e(dim);
  e.set_coeff(n, 1.0);
  return e;
}

Functional unit_functional(std::size_t n, std::size_t dim) {
  Functional g(dim);
  g.set_coeff(n, 1.0);
  return g;
}

namespace {
double l2_of(const std::vector<double>& c) {
  double s = 0.0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}
}  // namespace

double l2_norm(const Vector& x) { return l2_of(x.coords()); }
double l2_norm(const Functional& f) { return l2_of(f.coords()); }

void ModelConfig::validate() const {
  if (dim < 4) throw ConfigError("dim must be at least 4");
  if (!(p > 1.0)) throw ConfigError("exponent p must be strictly above 1");
  if (!(gauge_tol > 0.0)) throw ConfigError("gauge_tol must be positive");
  if (fd_steps.empty()) throw ConfigError("fd_steps must be nonempty");
  for (double h : fd_steps)
    if (!(h > 0.0)) throw ConfigError("fd_steps entries must be positive");
  double tail = 0.0;
  for (std::size_t n = 2; n <= dim; ++n) tail += 1.0 / (double(n) * double(n));
  if (!(tail < 1.0))
    throw ConfigError("compression weights must sum below 1 past coordinate 1");
}

std::vector<double> ModelConfig::t_weights() const {
  std::vector<double> w(dim);
  w[0] = std::sqrt(2.0);
  for (std::size_t n = 2; n <= dim; ++n) w[n - 1] = 1.0 / (double(n) * double(n));
  return w;
}

std::vector<double> ModelConfig::series_weights() const {
  std::vector<double> w(dim, 0.0);
  for (std::size_t n = 2; n <= dim; ++n) w[n - 1] = std::ldexp(1.0, -int(n));
  return w;
}

const char* norm_tag_name(NormTag tag) {
  switch (tag) {
    case NormTag::BaseP: return "base-p";
    case NormTag::Split: return "split";
    case NormTag::Theta: return "theta";
    case NormTag::HullGauge: return "hull-gauge";
    case NormTag::Final: return "final";
    case NormTag::TroyanskiL1: return "troyanski-l1";
    case NormTag::Lifted: return "lifted";
  }
  return "unknown";
}

// ============================================================================
// Deterministic Gaussian stream (splitmix64-seeded xoshiro256++, Box-Muller)
// ============================================================================

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

GaussianSource::GaussianSource(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

double GaussianSource::uniform01() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return double(result >> 11) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Vector GaussianSource::next_vector(std::size_t dim) {
  Vector x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = next();
  return x;
}

std::vector<Vector> sphere_sample(const NormHandle& handle, std::size_t dim,
                                  std::size_t count, std::uint64_t seed) {
  GaussianSource rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  while (out.size() < count) {
    Vector x = rng.next_vector(dim);
    double n = handle(x);
    if (!(n > 1e-12)) continue;
    for (std::size_t i = 0; i < dim; ++i) x[i] /= n;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace renorm
