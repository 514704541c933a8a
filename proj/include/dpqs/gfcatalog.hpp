#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpqs/series.hpp"

namespace dpqs {

// Catalog of the reference generating functions for partition and selection
// costs. Psf/Pct are partition-cost GFs; C*_grand are grand selection-cost
// GFs (coefficient of z^n is n times the grand average); C*_j are the
// rank-j selection-cost GFs.
enum class GfName {
  Psf,
  Pct,
  Cct_grand,
  Ccv_grand,
  Csf_grand,
  Cct_1,
  Cct_2,
  Cct_3,
  Cct_4,
  Ccv_1,
  Csf_1,
};

std::string to_string(GfName name);
std::optional<GfName> parse_gf_name(std::string_view text);
std::span<const GfName> all_gf_names();

// Exact series of the named closed form, assembled from the series
// primitives; log((1+z)/(1-z)) is always expanded as 2*artanh(z).
// Reconstructing at a higher order extends, never changes, low coefficients.
TruncSeries stated_gf(GfName name, int order);

// Grand-cost GF from a partition-cost GF via the second-order ODE solution.
TruncSeries derive_grand_gf(const TruncSeries& partition_gf);

// Inhomogeneity of the rank-j ODE,
//   Q_j = P'' - sum_{n<j} n(n-1) P_n z^{n-2}
//         + 2 sum_{k=0}^{j-1} C_k(z) z^{j-k-2} (z/(1-z) + j-k-1),
// with C_0 = 0. The k = j-1 term's z^{-1} factor is resolved symbolically:
// z^{-1} * z/(1-z) = 1/(1-z) and the (j-k-1) part vanishes, so no negative
// power survives.
TruncSeries build_Qj(const TruncSeries& partition_gf, int j,
                     std::span<const TruncSeries> lower);

// C_1..C_{j_max} via iterated build_Qj + solve_quickselect_ode.
std::vector<TruncSeries> derive_Cj_gf(const TruncSeries& partition_gf, int j_max);

// Residual of the grand ODE: C'' - (1/z)(z^2 P'')' - 6/(1-z)^2 C.
TruncSeries quicksort_ode_residual(const TruncSeries& c, const TruncSeries& p);

// Residual of the rank ODE: C'' - 2/(1-z)^2 C - Q.
TruncSeries quickselect_ode_residual(const TruncSeries& c, const TruncSeries& q);

}  // namespace dpqs
