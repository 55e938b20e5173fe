#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "renorm/final_norm.hpp"
#include "renorm/report.hpp"
#include "renorm/types.hpp"

namespace renorm {

/// The non-LUR witness family: apex x0, sphere sequence xn, supporting
/// functionals xn_star, and the shifted midpoints zn that pin the gauge of
/// (x0+xn)/2 from below.
struct WitnessTriple {
  std::size_t n = 0;
  Vector x0;
  Vector xn;
  Vector zn;
  Functional xn_star;
};

WitnessTriple lur_witness(std::size_t n, std::size_t dim);

double midpoint_defect(const NormHandle& handle, const Vector& x,
                       const Vector& y);

NormHandle make_troyanski_handle(std::size_t dim);

ProbeReport rotundity_scan(const NormHandle& handle, std::size_t dim,
                           std::size_t pairs, std::uint64_t seed,
                           double min_separation = 0.1,
                           bool separation_in_norm = false);

ProbeReport lur_failure_trace(const FinalModel& model, std::size_t n_max);

double gateaux_quotient(const NormHandle& handle, const Vector& x,
                        const Vector& y, double h);

ProbeReport gateaux_scan(const FinalModel& model, std::size_t points,
                         const std::vector<double>& h_schedule,
                         std::uint64_t seed);

/// Slice of the unit ball: members y satisfy pair(f, y) > sup_ball - alpha.
/// sup_ball is resolved at construction; for the renormed model it is the
/// certified upper dual bound, so membership is never overclaimed.
struct SliceSpec {
  Functional f;
  double alpha = 0.0;
  NormHandle handle;
  double sup_ball = 0.0;
};

SliceSpec make_final_slice(const FinalModel& model, Functional f, double alpha,
                           int budget = 12);
SliceSpec make_troyanski_slice(std::size_t dim, double alpha);

bool slice_contains(const SliceSpec& s, const Vector& x);

/// Largest pairwise distance (in the slice's own norm) among slice members
/// found by sampling plus caller-supplied candidates; nullopt when fewer than
/// two members turn up.
std::optional<double> slice_diameter_lb(
    const SliceSpec& s, std::size_t budget, std::uint64_t seed,
    const std::vector<Vector>& extra_members = {});

/// For shrinking slice widths alpha = 2^-1 .. 2^-k, reports the farthest
/// slice member from x among samples and caller-supplied candidates.
ProbeReport strongly_exposed_probe(const NormHandle& handle, const Vector& x,
                                   const Functional& f, double sup_ball,
                                   std::size_t k, std::uint64_t seed,
                                   const std::vector<Vector>& extra_members = {});

ProbeReport kadec_probe(const FinalModel& model, double beta,
                        const std::vector<std::size_t>& k_schedule);

ProbeReport l1_suite(std::size_t n_max, const std::vector<double>& deltas,
                     std::size_t samples, std::uint64_t seed);

ProbeReport boundary_suite(const FinalModel& model, std::size_t points,
                           double t, std::uint64_t seed);

ProbeReport lift_suite(const ModelConfig& block_cfg, std::size_t total_dim,
                       std::size_t witness_max);

ProbeReport oracle_suite(const SplitNormSpec& spec, std::size_t points,
                         std::uint64_t seed, double target_acc = 1e-3);

}  // namespace renorm
