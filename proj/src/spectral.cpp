#include "gallai/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "gallai/errors.hpp"

namespace gallai {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(sum);
}

std::vector<double> ascending(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(SpectrumSource source) {
  return source == SpectrumSource::numeric ? "numeric" : "closed_form";
}

SpectrumSource spectrum_source_from_string(std::string_view text) {
  if (text == "numeric") return SpectrumSource::numeric;
  if (text == "closed_form") return SpectrumSource::closed_form;
  throw InputError("unknown spectrum source '" + std::string(text) + "'");
}

Spectrum Spectrum::from_values(std::vector<double> values, SpectrumSource source, double tolerance) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.source = source;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] > tolerance) {
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += values[j];
      s.groups.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  s.values = std::move(values);
  return s;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw InputError("matrix has wrong size");
  for (int sweep = 0;; ++sweep) {
    if (off_diagonal_norm(a, n) < kOffDiagonalTolerance) break;
    if (sweep == kMaxSweeps) {
      throw NumericError("Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) +
                         " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rutishauser's form: t = tan of the rotation angle, |t| <= 1.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  return out;
}

Spectrum eigenvalues(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> matrix(g.adjacency().begin(), g.adjacency().end());
  return Spectrum::from_values(symmetric_eigenvalues(std::move(matrix), n), SpectrumSource::numeric);
}

Spectrum srg_spectrum(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  const std::string params = "(" + std::to_string(n) + "," + std::to_string(k) + "," +
                             std::to_string(lambda) + "," + std::to_string(mu) + ")";
  if (n < 2 || k < 1 || k >= n - 1 || lambda < 0 || mu < 1) {
    throw FeasibilityError("parameters " + params + " are outside the strongly regular range");
  }
  const double diff = static_cast<double>(lambda - mu);
  const double disc = diff * diff + 4.0 * static_cast<double>(k - mu);
  if (disc <= 0.0) throw FeasibilityError("parameters " + params + " give a non-positive discriminant");
  const double root = std::sqrt(disc);
  const double theta = (diff + root) / 2.0;
  const double tau = (diff - root) / 2.0;
  const double m_theta = (-static_cast<double>(k) - static_cast<double>(n - 1) * tau) / (theta - tau);
  const double m_tau = static_cast<double>(n - 1) - m_theta;

  auto integral = [](double m) {
    const double r = std::round(m);
    return std::abs(m - r) < 1e-6 && r >= 1.0;
  };
  if (!integral(m_theta) || !integral(m_tau)) {
    throw FeasibilityError("parameters " + params + " give multiplicities " + std::to_string(m_theta) +
                           " and " + std::to_string(m_tau) + ", not positive integers");
  }
  if (k * (k - lambda - 1) != (n - k - 1) * mu) {
    throw FeasibilityError("parameters " + params + " violate k(k-lambda-1) = (n-k-1)mu");
  }

  const auto mt = static_cast<std::size_t>(std::llround(m_theta));
  const auto mr = static_cast<std::size_t>(std::llround(m_tau));
  Spectrum s;
  s.source = SpectrumSource::closed_form;
  s.values.push_back(static_cast<double>(k));
  s.values.insert(s.values.end(), mt, theta);
  s.values.insert(s.values.end(), mr, tau);
  s.groups = {{static_cast<double>(k), 1}, {theta, mt}, {tau, mr}};
  return s;
}

Spectrum rcn_spectrum(std::int64_t n) {
  if (n < 3) throw InputError("R(C_n) needs n >= 3, got " + std::to_string(n));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t j = 1; j <= n; ++j) {
    const double r = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    const double root = std::sqrt(r * r + 4.0 * r + 8.0);
    values.push_back((r + root) / 2.0);
    values.push_back((r - root) / 2.0);
  }
  return Spectrum::from_values(std::move(values), SpectrumSource::closed_form);
}

bool interlaces(std::span<const double> inner, std::span<const double> outer) {
  const std::size_t m = inner.size();
  const std::size_t n = outer.size();
  if (m >= n) {
    throw InputError("interlacing needs fewer inner values than outer (" + std::to_string(m) +
                     " vs " + std::to_string(n) + ")");
  }
  const auto beta = ascending(inner);
  const auto alpha = ascending(outer);
  for (std::size_t i = 0; i < m; ++i) {
    if (alpha[i] > beta[i] + kComparisonTolerance) return false;
    if (beta[i] > alpha[i + n - m] + kComparisonTolerance) return false;
  }
  return true;
}

bool interlaces(const Spectrum& inner, const Spectrum& outer) {
  return interlaces(std::span<const double>(inner.values), std::span<const double>(outer.values));
}

bool spectrum_in_band(const Spectrum& s, double k) {
  return std::all_of(s.values.begin(), s.values.end(), [k](double x) {
    return x >= -k - kComparisonTolerance && x <= k + kComparisonTolerance;
  });
}

bool groups_agree(const Spectrum& a, const Spectrum& b, double tolerance) {
  if (a.groups.size() != b.groups.size()) return false;
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    if (a.groups[i].multiplicity != b.groups[i].multiplicity) return false;
    if (std::abs(a.groups[i].value - b.groups[i].value) > tolerance) return false;
  }
  return true;
}

}  // namespace gallai
