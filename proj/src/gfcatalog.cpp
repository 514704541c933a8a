#include "dpqs/gfcatalog.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace dpqs {

namespace {

// Shared building blocks at a fixed order.
struct Blocks {
  int n;
  TruncSeries inv1, inv2, inv3;  // (1-z)^{-1..-3}
  TruncSeries p1, p2, p3, p4, p5;
  TruncSeries lm, lp, at2, lm_sq, l2;

  explicit Blocks(int order)
      : n(order),
        inv1(TruncSeries::geom_pow(-1, order)),
        inv2(TruncSeries::geom_pow(-2, order)),
        inv3(TruncSeries::geom_pow(-3, order)),
        p1(TruncSeries::geom_pow(1, order)),
        p2(TruncSeries::geom_pow(2, order)),
        p3(TruncSeries::geom_pow(3, order)),
        p4(TruncSeries::geom_pow(4, order)),
        p5(TruncSeries::geom_pow(5, order)),
        lm(TruncSeries::log_one_minus(order)),
        lp(TruncSeries::log_one_plus(order)),
        at2(Rational(2) * TruncSeries::artanh(order)),
        lm_sq(TruncSeries::log_one_minus(order) * TruncSeries::log_one_minus(order)),
        l2(TruncSeries::l2(order)) {}

  TruncSeries c(long num, long den) const {
    return TruncSeries::constant(Rational(num, den), n);
  }
  TruncSeries mono(long num, long den, int pow) const {
    return TruncSeries::monomial(Rational(num, den), pow, n);
  }
};

TruncSeries partition_sf(const Blocks& b) {
  return Rational(5, 3) * b.inv2 - Rational(4) * b.inv1 - Rational(2, 3) * b.p1 + b.c(3, 1);
}

TruncSeries partition_ct(const Blocks& b) {
  const TruncSeries at = TruncSeries::artanh(b.n);
  const TruncSeries three_plus_z = b.c(3, 1) + b.mono(1, 1, 1);
  return Rational(3, 2) * b.inv2 + Rational(1, 2) * (at * b.inv1) -
         Rational(31, 8) * shift_up(b.inv1, 2).truncate(b.n) -
         Rational(1, 8) * (three_plus_z * at) - b.c(3, 2) - b.mono(25, 8, 1);
}

TruncSeries count_grand(const Blocks& b) {
  return Rational(6) * b.inv3 + Rational(3, 20) * (b.lm_sq * b.inv2) -
         Rational(3, 10) * (b.l2 * b.inv2) + Rational(194, 25) * (b.lm * b.inv2) -
         Rational(9, 25) * (b.lp * b.inv2) - Rational(531, 125) * b.inv2 +
         Rational(1, 8) * (b.lp * b.inv1) - Rational(1, 8) * (b.lm * b.inv1) -
         Rational(1389, 800) * b.inv1 - Rational(11, 3200) * (b.p3 * b.lm) +
         Rational(11, 3200) * (b.p3 * b.lp) - Rational(29, 750) * b.p3 +
         Rational(11, 1600) * b.p2 - b.mono(11, 1600, 1) + b.c(77, 4800);
}

TruncSeries clairvoyant_grand(const Blocks& b) {
  return Rational(6) * b.inv3 - Rational(3, 20) * (b.lm_sq * b.inv2) +
         Rational(3, 10) * (b.l2 * b.inv2) + Rational(41, 5) * (b.lm * b.inv2) +
         Rational(9, 25) * (b.at2 * b.inv2) - Rational(529, 125) * b.inv2 -
         Rational(1, 8) * (b.at2 * b.inv1) - Rational(1411, 800) * b.inv1 -
         b.c(11, 1200) - Rational(11, 1600) * b.p1 - Rational(11, 1600) * b.p2 -
         Rational(11, 3200) * (b.p3 * b.at2) + Rational(7, 375) * b.p3;
}

TruncSeries smaller_first_grand(const Blocks& b) {
  return Rational(20, 3) * b.inv3 + Rational(44, 5) * (b.lm * b.inv2) -
         Rational(116, 25) * b.inv2 - Rational(2) * b.inv1 - Rational(2, 75) * b.p3;
}

TruncSeries count_rank1(const Blocks& b) {
  return Rational(9, 4) * b.inv2 + Rational(1, 12) * (b.lm_sq * b.inv1) -
         Rational(1, 6) * (b.l2 * b.inv1) + Rational(7, 3) * (b.lm * b.inv1) -
         Rational(1, 18) * (b.at2 * b.inv1) - Rational(119, 54) * b.inv1 +
         b.c(1, 72) + Rational(1, 72) * b.p1 + Rational(1, 144) * (b.p2 * b.at2) -
         Rational(2, 27) * b.p2;
}

TruncSeries clairvoyant_rank1(const Blocks& b) {
  return Rational(9, 4) * b.inv2 - Rational(1, 12) * (b.lm_sq * b.inv1) +
         Rational(1, 6) * (b.l2 * b.inv1) - Rational(121, 54) * b.inv1 +
         Rational(7, 3) * (b.lm * b.inv1) + Rational(1, 18) * (b.at2 * b.inv1) -
         b.c(1, 72) - Rational(1, 72) * b.p1 - Rational(1, 144) * (b.p2 * b.at2) +
         Rational(1, 54) * b.p2;
}

TruncSeries smaller_first_rank1(const Blocks& b) {
  return Rational(5, 2) * b.inv2 + Rational(8, 3) * (b.lm * b.inv1) -
         Rational(22, 9) * b.inv1 - Rational(1, 18) * b.p2;
}

TruncSeries count_rank2(const Blocks& b) {
  return Rational(9, 4) * b.inv2 + Rational(1, 12) * (b.lm_sq * b.inv1) -
         Rational(1, 6) * (b.l2 * b.inv1) + b.lm * b.inv1 +
         Rational(1, 9) * (b.at2 * b.inv1) - Rational(1241, 216) * b.inv1 -
         Rational(1, 12) * b.lm_sq + Rational(1, 6) * b.l2 - Rational(7, 3) * b.lm -
         Rational(1, 36) * b.at2 + b.c(91, 27) - Rational(1, 48) * b.p1 -
         Rational(1, 72) * (b.p2 * b.at2) + Rational(79, 432) * b.p2 +
         Rational(1, 288) * (b.p3 * b.at2) - Rational(1, 27) * b.p3;
}

TruncSeries count_rank3(const Blocks& b) {
  return Rational(9, 4) * b.inv2 + Rational(1, 12) * (b.lm_sq * b.inv1) -
         Rational(1, 6) * (b.l2 * b.inv1) - Rational(3, 10) * (b.lm * b.inv1) +
         Rational(14, 45) * (b.at2 * b.inv1) - Rational(1009, 108) * b.inv1 -
         Rational(1, 6) * b.lm_sq + Rational(1, 3) * b.l2 - Rational(10, 3) * b.lm -
         Rational(2, 9) * b.at2 + b.c(5149, 540) + Rational(1, 12) * (b.p1 * b.lm_sq) -
         Rational(1, 6) * (b.p1 * b.l2) + Rational(7, 3) * (b.p1 * b.lm) -
         Rational(1, 18) * (b.p1 * b.at2) - Rational(4601, 2160) * b.p1 -
         Rational(55, 72) * (b.p2 * b.lm) + Rational(7, 144) * (b.p2 * b.at2) -
         Rational(193, 540) * b.p2 - Rational(1, 288) * (b.p3 * b.at2) +
         Rational(113, 2160) * b.p3 - Rational(1, 1440) * (b.p4 * b.at2) +
         Rational(1, 135) * b.p4;
}

TruncSeries count_rank4(const Blocks& b) {
  return Rational(9, 4) * b.inv2 + Rational(1, 12) * (b.lm_sq * b.inv1) -
         Rational(1, 6) * (b.l2 * b.inv1) - Rational(29, 18) * (b.lm * b.inv1) +
         Rational(1, 2) * (b.at2 * b.inv1) - Rational(14173, 1080) * b.inv1 -
         Rational(1, 4) * b.lm_sq + Rational(1, 2) * b.l2 - Rational(91, 30) * b.lm -
         Rational(37, 60) * b.at2 + b.c(445, 24) + Rational(1, 4) * (b.p1 * b.lm_sq) -
         Rational(1, 2) * (b.p1 * b.l2) + Rational(17, 3) * (b.p1 * b.lm) -
         Rational(1373, 180) * b.p1 - Rational(6) * (b.p2 * b.lm) +
         Rational(1, 18) * (b.p2 * b.at2) - Rational(4687, 1080) * b.p2 -
         Rational(1, 3) * (b.p3 * b.lm) + Rational(1, 48) * (b.p3 * b.at2) +
         Rational(3089, 720) * b.p3 - Rational(1, 720) * b.p4 -
         Rational(1, 1440) * (b.p5 * b.at2) + Rational(1, 135) * b.p5;
}

constexpr std::array<GfName, 11> kAllNames = {
    GfName::Psf,    GfName::Pct,    GfName::Cct_grand, GfName::Ccv_grand,
    GfName::Csf_grand, GfName::Cct_1, GfName::Cct_2,   GfName::Cct_3,
    GfName::Cct_4,  GfName::Ccv_1,  GfName::Csf_1,
};

}  // namespace

std::string to_string(GfName name) {
  switch (name) {
    case GfName::Psf: return "Psf";
    case GfName::Pct: return "Pct";
    case GfName::Cct_grand: return "Cct_grand";
    case GfName::Ccv_grand: return "Ccv_grand";
    case GfName::Csf_grand: return "Csf_grand";
    case GfName::Cct_1: return "Cct_1";
    case GfName::Cct_2: return "Cct_2";
    case GfName::Cct_3: return "Cct_3";
    case GfName::Cct_4: return "Cct_4";
    case GfName::Ccv_1: return "Ccv_1";
    case GfName::Csf_1: return "Csf_1";
  }
  throw std::invalid_argument("unknown generating function name");
}

std::optional<GfName> parse_gf_name(std::string_view text) {
  for (GfName name : kAllNames)
    if (to_string(name) == text) return name;
  return std::nullopt;
}

std::span<const GfName> all_gf_names() { return kAllNames; }

TruncSeries stated_gf(GfName name, int order) {
  const Blocks b(order);
  switch (name) {
    case GfName::Psf: return partition_sf(b);
    case GfName::Pct: return partition_ct(b);
    case GfName::Cct_grand: return count_grand(b);
    case GfName::Ccv_grand: return clairvoyant_grand(b);
    case GfName::Csf_grand: return smaller_first_grand(b);
    case GfName::Cct_1: return count_rank1(b);
    case GfName::Cct_2: return count_rank2(b);
    case GfName::Cct_3: return count_rank3(b);
    case GfName::Cct_4: return count_rank4(b);
    case GfName::Ccv_1: return clairvoyant_rank1(b);
    case GfName::Csf_1: return smaller_first_rank1(b);
  }
  throw std::invalid_argument("unknown generating function name");
}

TruncSeries derive_grand_gf(const TruncSeries& partition_gf) {
  if (!partition_gf[0].is_zero() || !partition_gf[1].is_zero())
    throw std::domain_error("derive_grand_gf: partition GF must vanish below z^2");
  return solve_quicksort_ode(partition_gf);
}

TruncSeries build_Qj(const TruncSeries& partition_gf, int j,
                     std::span<const TruncSeries> lower) {
  if (j < 1) throw std::invalid_argument("build_Qj: j must be >= 1");
  if (static_cast<int>(lower.size()) < j)
    throw std::invalid_argument("build_Qj: need C_0..C_{j-1}");
  if (!lower[0].is_zero())
    throw std::domain_error("build_Qj: C_0 must be the zero series");

  const int n = partition_gf.order();
  TruncSeries qj = derivative(derivative(partition_gf));
  // Remove sum_{m<j} m(m-1) P_m z^{m-2}: zero the coefficients of z^0..z^{j-3}.
  for (int t = 0; t <= std::min(j - 3, qj.order()); ++t) qj.set(t, Rational(0));

  const TruncSeries z_over = shift_up(TruncSeries::geom_pow(-1, n), 1);  // z/(1-z)
  for (int k = 1; k <= j - 1; ++k) {
    TruncSeries term(0);
    if (k == j - 1) {
      // z^{-1} case: only the z/(1-z) part survives, as 1/(1-z).
      term = lower[k] * TruncSeries::geom_pow(-1, n);
    } else {
      const int e = j - k - 2;
      term = lower[k] * shift_up(z_over, e) +
             Rational(j - k - 1) * shift_up(lower[k], e);
    }
    qj += Rational(2) * term;
  }
  return qj;
}

std::vector<TruncSeries> derive_Cj_gf(const TruncSeries& partition_gf, int j_max) {
  std::vector<TruncSeries> cs;
  cs.emplace_back(partition_gf.order());  // C_0 = 0
  for (int j = 1; j <= j_max; ++j) {
    const TruncSeries qj = build_Qj(partition_gf, j, cs);
    cs.push_back(solve_quickselect_ode(qj).truncate(partition_gf.order()));
  }
  cs.erase(cs.begin());
  return cs;
}

TruncSeries quicksort_ode_residual(const TruncSeries& c, const TruncSeries& p) {
  const TruncSeries c2 = derivative(derivative(c));
  const TruncSeries p2 = derivative(derivative(p));
  const TruncSeries inhom = shift_down(derivative(shift_up(p2, 2)), 1);
  const int n = std::min(c2.order(), inhom.order());
  return c2.truncate(n) - inhom.truncate(n) -
         Rational(6) * (TruncSeries::geom_pow(-2, n) * c.truncate(n));
}

TruncSeries quickselect_ode_residual(const TruncSeries& c, const TruncSeries& q) {
  const TruncSeries c2 = derivative(derivative(c));
  const int n = std::min(c2.order(), q.order());
  return c2.truncate(n) - Rational(2) * (TruncSeries::geom_pow(-2, n) * c.truncate(n)) -
         q.truncate(n);
}

}  // namespace dpqs
