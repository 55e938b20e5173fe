#ifndef RENORM_TYPES_HPP
#define RENORM_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace renorm {

// ============================================================================
// Errors
// ============================================================================

/// Invalid model parameters (dimension too small, exponent out of range, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Index or length outside the model dimension.
struct DimensionError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Input outside an operation's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Iterative solver failed to certify its result; message carries diagnostics.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requested on a model it does not support (e.g. exponent != 2).
struct UnsupportedModelError : std::logic_error {
  using std::logic_error::logic_error;
};

// ============================================================================
// Coordinate vectors
// ============================================================================

/// Dense coordinate array over the truncation.  Storage is 0-based; the
/// 1-based accessors mirror the sequence-space convention used everywhere
/// in the interfaces ("coordinate n" means the n-th basis direction).
template <class Tag>
class CoordVec {
 public:
  CoordVec() = default;
  explicit CoordVec(std::size_t n) : c_(n, 0.0) {}
  explicit CoordVec(std::vector<double> v) : c_(std::move(v)) {}

  std::size_t dim() const { return c_.size(); }

  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  /// 1-based, range-checked coordinate access.
  double coeff(std::size_t n) const {
    check_index(n);
    return c_[n - 1];
  }
  void set_coeff(std::size_t n, double v) {
    check_index(n);
    c_[n - 1] = v;
  }

  const std::vector<double>& coords() const { return c_; }
  std::vector<double>& coords() { return c_; }

  CoordVec& operator+=(const CoordVec& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CoordVec& operator-=(const CoordVec& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CoordVec& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }

  friend CoordVec operator+(CoordVec a, const CoordVec& b) { return a += b; }
  friend CoordVec operator-(CoordVec a, const CoordVec& b) { return a -= b; }
  friend CoordVec operator*(double s, CoordVec a) { return a *= s; }
  friend CoordVec operator*(CoordVec a, double s) { return a *= s; }

 private:
  void check_index(std::size_t n) const {
    if (n < 1 || n > c_.size())
      throw DimensionError("coordinate index " + std::to_string(n) +
                           " outside 1.." + std::to_string(c_.size()));
  }
  void check_same_dim(const CoordVec& o) const {
    if (o.c_.size() != c_.size())
      throw DimensionError("length mismatch: " + std::to_string(c_.size()) +
                           " vs " + std::to_string(o.c_.size()));
  }
  std::vector<double> c_;
};

struct VectorTag;
struct FunctionalTag;

/// Point of the truncated sequence space.
using Vector = CoordVec<VectorTag>;
/// Element of the dual truncation (coordinate functionals span it).
using Functional = CoordVec<FunctionalTag>;

/// Duality pairing sum_n f_n x_n.
double pair(const Functional& f, const Vector& x);

/// n-th basis vector (1-based) in the given dimension.
Vector unit_vector(std::size_t n, std::size_t dim);
/// n-th coordinate functional (1-based) in the given dimension.
Functional unit_functional(std::size_t n, std::size_t dim);

double l2_norm(const Vector& x);
double l2_norm(const Functional& f);

// ============================================================================
// Model configuration
// ============================================================================

/// Parameters of one truncated model instance.
struct ModelConfig {
  std::size_t dim = 64;  ///< truncation level, at least 4
  double p = 2.0;        ///< base-norm exponent, strictly above 1
  double gauge_tol = 1e-9;
  std::vector<double> fd_steps = {1e-2, 1e-3, 1e-4, 1e-5};
  std::uint64_t seed = 0;

  /// Throws ConfigError when any field is out of contract.
  void validate() const;

  /// Diagonal compression weights: sqrt(2) on coordinate 1, 1/n^2 beyond.
  std::vector<double> t_weights() const;
  /// Tail series weights: 2^-n for n >= 2, zero on coordinate 1.
  std::vector<double> series_weights() const;
};

// ============================================================================
// Norm handles
// ============================================================================

enum class NormTag {
  BaseP,        ///< plain p-norm of the coordinates
  Split,        ///< quadratic combination of coordinate 1 and the rest
  Theta,        ///< norm transported from the Hilbert ball by the compression
  HullGauge,    ///< Minkowski gauge of the hull of the split and theta balls
  Final,        ///< hull gauge corrected by the weighted tail series
  TroyanskiL1,  ///< weighted-l1 example norm (own ambient space)
  Lifted,       ///< direct-sum lift: Final on a leading block, p-norm beyond
};

const char* norm_tag_name(NormTag tag);

/// A tagged norm evaluator.  Handles are cheap to copy and hold whatever
/// model state their evaluator needs.
struct NormHandle {
  NormTag tag{};
  std::function<double(const Vector&)> eval;
  double operator()(const Vector& x) const { return eval(x); }
};

/// Deterministic unit-sphere samples for the handle's norm: normalized
/// Gaussian draws from a fixed-seed generator, redrawn on near-null vectors.
std::vector<Vector> sphere_sample(const NormHandle& handle, std::size_t dim,
                                  std::size_t count, std::uint64_t seed);

/// Deterministic standard Gaussian vector stream (same bytes on every
/// platform; does not rely on std::normal_distribution).
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed);
  double next();
  Vector next_vector(std::size_t dim);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
  double uniform01();
};

}  // namespace renorm

#endif  // RENORM_TYPES_HPP
