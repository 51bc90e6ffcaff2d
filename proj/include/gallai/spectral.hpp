#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

inline constexpr double kOffDiagonalTolerance = 1e-12;
inline constexpr double kClusterTolerance = 1e-6;
inline constexpr double kComparisonTolerance = 1e-8;

enum class SpectrumSource { numeric, closed_form };

std::string_view to_string(SpectrumSource source);
SpectrumSource spectrum_source_from_string(std::string_view text);

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;

  bool operator==(const EigenGroup&) const = default;
};

/// Eigenvalues in non-increasing order together with their multiplicity view.
struct Spectrum {
  std::vector<double> values;
  std::vector<EigenGroup> groups;
  SpectrumSource source = SpectrumSource::numeric;

  /// Sorts `values` and clusters neighbours closer than `tolerance`; each
  /// group carries the mean of its cluster.
  static Spectrum from_values(std::vector<double> values, SpectrumSource source,
                              double tolerance = kClusterTolerance);

  std::size_t size() const { return values.size(); }

  bool operator==(const Spectrum&) const = default;
};

/// All eigenvalues of a dense symmetric n*n row-major matrix by cyclic Jacobi
/// rotations, unsorted. Throws NumericError if the off-diagonal norm does not
/// fall below kOffDiagonalTolerance within the sweep cap.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Adjacency spectrum.
Spectrum eigenvalues(const Graph& g);

/// Closed-form spectrum {k^1, θ^{mθ}, τ^{mτ}} of an (n,k,λ,μ) strongly regular
/// graph, with θ,τ = ((λ-μ) ± sqrt((λ-μ)^2 + 4(k-μ)))/2 and multiplicities
/// from mθ + mτ = n-1 and k + mθ θ + mτ τ = 0. Throws FeasibilityError when
/// the multiplicities are not positive integers or k(k-λ-1) != (n-k-1)μ.
Spectrum srg_spectrum(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu);

/// Closed-form spectrum of R(C_n): (r ± sqrt(r^2 + 4r + 8))/2 with
/// r = 2cos(2πj/n), j = 1..n. Requires n >= 3.
Spectrum rcn_spectrum(std::int64_t n);

/// β (inner, m values) interlaces α (outer, n > m values): with both sorted
/// ascending, α_i <= β_i <= α_{i+n-m}, each comparison with kComparisonTolerance
/// slack. Throws InputError unless m < n.
bool interlaces(const Spectrum& inner, const Spectrum& outer);
bool interlaces(std::span<const double> inner, std::span<const double> outer);

/// Every eigenvalue within [-k, k] up to kComparisonTolerance.
bool spectrum_in_band(const Spectrum& s, double k);

/// Same number of groups with equal multiplicities and values within `tolerance`.
bool groups_agree(const Spectrum& a, const Spectrum& b, double tolerance = kClusterTolerance);

}  // namespace gallai
