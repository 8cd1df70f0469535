#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamcon/binomial.hpp"
#include "hamcon/cliques.hpp"

// Closed-form extremal sizes. Every piecewise condition of the form
// "delta <= (n + c) / 6" is evaluated as the integer test 6 * delta <= n + c.

namespace hamcon {

enum class BoundKind {
  kOreNh,        // max size of a nonhamiltonian graph
  kErdos,        // nonhamiltonian, min degree at least delta
  kZhang,        // nonhamiltonian 2-connected, min degree delta
  kShPancyclic,  // nonpancyclic, min degree delta
  kOreNhc,       // max size of a non-hamiltonian-connected graph
  kHo,           // non-hamiltonian-connected, min degree at least delta
  kPhiS,         // max s-cliques, non-hamiltonian-connected, min degree exactly delta
  kPhi,          // max size, non-hamiltonian-connected, min degree exactly delta
  kCor2,         // max s-cliques, k-connected non-hamiltonian-connected
};

/// Which branch of a piecewise bound produced the value. For the two-branch
/// formulas kF names the delta-dependent (small delta) branch and kG the other;
/// for phi and phi_s they are the F(n,delta) and G(n,delta) constructions.
enum class Regime { kSingle, kF, kG, kBoundary };

struct BoundResult {
  BigInt value;
  Regime regime = Regime::kSingle;
  BoundKind kind = BoundKind::kPhi;
};

struct ExtremalFamily {
  bool f = false;
  bool g = false;

  friend bool operator==(const ExtremalFamily&, const ExtremalFamily&) = default;
};

inline std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kOreNh: return "ore-nh";
    case BoundKind::kErdos: return "erdos";
    case BoundKind::kZhang: return "zhang";
    case BoundKind::kShPancyclic: return "sh-pancyclic";
    case BoundKind::kOreNhc: return "ore-nhc";
    case BoundKind::kHo: return "ho";
    case BoundKind::kPhiS: return "phi-s";
    case BoundKind::kPhi: return "phi";
    case BoundKind::kCor2: return "cor2";
  }
  return "?";
}

inline std::optional<BoundKind> parse_bound_kind(std::string_view s) {
  for (auto k : {BoundKind::kOreNh, BoundKind::kErdos, BoundKind::kZhang, BoundKind::kShPancyclic,
                 BoundKind::kOreNhc, BoundKind::kHo, BoundKind::kPhiS, BoundKind::kPhi,
                 BoundKind::kCor2}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kSingle: return "single";
    case Regime::kF: return "F";
    case Regime::kG: return "G";
    case Regime::kBoundary: return "boundary";
  }
  return "?";
}

inline std::string to_string(const ExtremalFamily& fam) {
  if (fam.f && fam.g) return "F,G";
  return fam.f ? "F" : "G";
}

namespace detail {

inline BoundResult pick_max(BigInt first, BigInt second, BoundKind kind) {
  if (first > second) return {first, Regime::kF, kind};
  if (second > first) return {second, Regime::kG, kind};
  return {first, Regime::kBoundary, kind};
}

// Merges the two branches of a piecewise formula given which ranges hold.
inline BoundResult piecewise(bool first_applies, bool second_applies, const BigInt& first,
                             const BigInt& second, BoundKind kind, const std::string& where) {
  if (first_applies && second_applies) return {first > second ? first : second, Regime::kBoundary, kind};
  if (first_applies) return {first, Regime::kF, kind};
  if (second_applies) return {second, Regime::kG, kind};
  throw RangeError(where);
}

inline std::string args(std::int64_t n, std::int64_t delta) {
  return "(n=" + std::to_string(n) + ", delta=" + std::to_string(delta) + ")";
}

inline BigInt exact_eighth(const BigInt& numerator) {
  if (numerator % 8 != 0) throw std::logic_error("closed form is not integral");
  return numerator / 8;
}

}  // namespace detail

inline BoundResult phi_s(std::int64_t n, std::int64_t delta, std::int64_t s) {
  return detail::pick_max(f_s_formula(n, delta, s), g_s_formula(n, delta, s), BoundKind::kPhiS);
}

/// Maximum size of a non-hamiltonian-connected graph of order n and minimum
/// degree exactly delta, from its three-case closed form.
inline BoundResult phi(std::int64_t n, std::int64_t delta) {
  if (delta < 3 || delta > n / 2) {
    throw RangeError("phi" + detail::args(n, delta) + ": need 3 <= delta <= floor(n/2)");
  }
  const bool odd = n % 2 != 0;
  const std::int64_t split = odd ? n + 13 : n + 10;
  const bool low = 6 * delta <= split;
  const bool high = 6 * delta >= split;
  const BigInt low_value = binomial(n - delta + 1, 2) + delta * (delta - 1);
  const BigInt n2 = BigInt(n) * n;
  const BigInt high_value =
      detail::exact_eighth(odd ? BigInt(3 * n2 - 8 * n + 13) : BigInt(3 * n2 - 6 * n)) + delta;
  if (low && high && low_value != high_value) {
    throw std::logic_error("phi" + detail::args(n, delta) + ": branches disagree at boundary");
  }
  return detail::piecewise(low, high, low_value, high_value, BoundKind::kPhi, "phi");
}

/// Constructions attaining phi(n, delta).
inline ExtremalFamily extremal_family(std::int64_t n, std::int64_t delta) {
  if (delta < 3 || delta > n / 2) {
    throw RangeError("extremal_family" + detail::args(n, delta) +
                     ": need 3 <= delta <= floor(n/2)");
  }
  const std::int64_t boundary = n % 2 != 0 ? n + 13 : n + 10;
  const std::int64_t scaled = 6 * delta;
  if (scaled == boundary) return {true, true};
  // The parities of 6 delta and n agree, so below the boundary means
  // 6 delta <= n + 11 (odd) or n + 8 (even), and above means >= n + 15 or n + 12.
  return scaled < boundary ? ExtremalFamily{true, false} : ExtremalFamily{false, true};
}

inline BoundResult reference_bound(BoundKind kind, std::int64_t n, std::int64_t delta = 0,
                                   std::int64_t s = 2) {
  const bool odd = n % 2 != 0;
  switch (kind) {
    case BoundKind::kOreNh:
      if (n < 3) throw RangeError("ore-nh: need n >= 3");
      return {binomial(n - 1, 2) + 1, Regime::kSingle, kind};

    case BoundKind::kOreNhc:
      if (n < 4) throw RangeError("ore-nhc: need n >= 4");
      return {binomial(n - 1, 2) + 2, Regime::kSingle, kind};

    case BoundKind::kErdos: {
      const std::int64_t h = (n - 1) / 2;
      if (delta < 1 || delta > h) {
        throw RangeError("erdos" + detail::args(n, delta) + ": need 1 <= delta <= floor((n-1)/2)");
      }
      return detail::pick_max(binomial(n - delta, 2) + delta * delta, binomial(n - h, 2) + h * h,
                              kind);
    }

    case BoundKind::kZhang: {
      if (delta < 1 || n < delta + 1) {
        throw RangeError("zhang" + detail::args(n, delta) + ": need positive delta with n >= delta+1");
      }
      const std::int64_t t = (n - 1) / 2;
      return detail::pick_max(binomial(n - delta, 2) + delta * delta,
                              binomial(n - t, 2) + t * (t - 1) + delta, kind);
    }

    case BoundKind::kShPancyclic: {
      if (delta < 1) throw RangeError("sh-pancyclic: need delta >= 1");
      const BigInt n2 = BigInt(n) * n;
      const BigInt first = binomial(n - delta, 2) + delta * delta;
      if (odd) {
        const bool a = 6 * delta <= n + 5;
        const bool b = 6 * delta >= n + 5 && 2 * delta <= n - 1;
        BigInt second = b ? BigInt(detail::exact_eighth(3 * n2 - 8 * n + 5) + delta) : BigInt(0);
        return detail::piecewise(a, b, first, second, kind,
                                 "sh-pancyclic" + detail::args(n, delta) +
                                     ": need delta <= (n-1)/2 for odd n");
      }
      const bool a = 6 * delta <= n + 8;
      const bool b = 6 * delta >= n + 8 && 2 * delta <= n - 2;
      BigInt second = b ? BigInt(detail::exact_eighth(3 * n2 - 10 * n + 16) + delta) : BigInt(0);
      return detail::piecewise(a, b, first, second, kind,
                               "sh-pancyclic" + detail::args(n, delta) +
                                   ": need delta <= (n-2)/2 for even n");
    }

    case BoundKind::kHo: {
      if (delta < 3 || delta > n / 2) {
        throw RangeError("ho" + detail::args(n, delta) + ": need 3 <= delta <= floor(n/2)");
      }
      const std::int64_t t = n / 2;
      const std::int64_t split = odd ? n + 9 : n + 6;
      const bool a = 6 * delta <= split;
      const bool b = 6 * delta > split;
      return detail::piecewise(a, b, binomial(n - delta + 1, 2) + delta * (delta - 1),
                               binomial(n - t + 1, 2) + t * (t - 1), kind, "ho");
    }

    case BoundKind::kPhiS: return phi_s(n, delta, s);
    case BoundKind::kPhi: return phi(n, delta);

    case BoundKind::kCor2: {
      if (delta < 3 || delta > n / 2) {
        throw RangeError("cor2" + detail::args(n, delta) + ": need 3 <= k <= floor(n/2)");
      }
      return detail::pick_max(f_s_formula(n, delta, s), g_s_formula(n, n / 2, s), kind);
    }
  }
  throw RangeError("unknown bound kind");
}

}  // namespace hamcon
