#pragma once

// Chern data and diffeomorphism type of a degree-k symplectic hypersurface Y
// of CP^3 for 1 <= k <= 3. With eta the restricted hyperplane class,
// c(TY) = (1 + eta)^4 / (1 + k eta), and eta^2 evaluates to k on Y.

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {

enum class DelPezzoType { CP2, S2xS2, CP2_6CP2bar, Unsupported };

constexpr std::string_view to_string(DelPezzoType t) {
  switch (t) {
    case DelPezzoType::CP2: return "CP2";
    case DelPezzoType::S2xS2: return "S2xS2";
    case DelPezzoType::CP2_6CP2bar: return "CP2 # 6 CP2bar";
    case DelPezzoType::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

struct ChernData {
  std::int64_t c1 = 0;  // coefficient of eta
  std::int64_t c2 = 0;  // coefficient of eta^2

  friend bool operator==(ChernData, ChernData) = default;
};

struct HypersurfaceData {
  std::int64_t k = 0;
  ChernData chern;
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t b2minus = 0;
  bool spin = false;
  DelPezzoType diffeoType = DelPezzoType::Unsupported;
  std::string reason;  // set when Unsupported

  friend bool operator==(const HypersurfaceData&, const HypersurfaceData&) = default;
};

constexpr ChernData chernData(std::int64_t k) { return {4 - k, k * k - 4 * k + 6}; }

/// chi = integral of c2 = k (k^2 - 4k + 6); sigma from c1^2 = 3 sigma + 2 chi.
inline std::pair<std::int64_t, std::int64_t> hypersurfaceInvariants(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "degree must be positive");
  const auto [c1, c2] = chernData(k);
  const std::int64_t chi = c2 * k;
  const std::int64_t c1Squared = c1 * c1 * k;
  const std::int64_t num = c1Squared - 2 * chi;
  if (num % 3 != 0) throw Error(ErrorCode::NonIntegralSignature, "c1^2 - 2 chi not divisible by 3 for k = " + std::to_string(k));
  return {chi, num / 3};
}

/// 3 (k-1)^2 / (k^2 - 6k + 11), for 1 <= k <= 3 where the division is exact.
inline std::int64_t b2minus(std::int64_t k) {
  if (k < 1 || k > 3) throw Error(ErrorCode::OutOfRange, "b2- formula applies for 1 <= k <= 3 only");
  const std::int64_t num = 3 * (k - 1) * (k - 1);
  const std::int64_t den = k * k - 6 * k + 11;
  if (num % den != 0) throw Error(ErrorCode::OutOfRange, "inexact b2- for k = " + std::to_string(k));
  return num / den;
}

inline HypersurfaceData classify(std::int64_t k) {
  HypersurfaceData d;
  d.k = k;
  if (k < 1 || k > 3) {
    if (k >= 1) {
      d.chern = chernData(k);
      std::tie(d.chi, d.sigma) = hypersurfaceInvariants(k);
    }
    d.reason = "outside the supported degree range 1 <= k <= 3";
    return d;
  }
  d.chern = chernData(k);
  std::tie(d.chi, d.sigma) = hypersurfaceInvariants(k);
  d.b2minus = b2minus(k);
  // b1 = 0 and c1 = (4-k) eta: w2 vanishes exactly when c1 is even.
  d.spin = d.chern.c1 % 2 == 0;
  switch (k) {
    case 1: d.diffeoType = DelPezzoType::CP2; break;
    // b2- = 1 leaves S2xS2 or CP2 # CP2bar; spin rules out the latter.
    case 2: d.diffeoType = d.spin ? DelPezzoType::S2xS2 : DelPezzoType::Unsupported; break;
    case 3: d.diffeoType = DelPezzoType::CP2_6CP2bar; break;
  }
  return d;
}

}  // namespace lefschetz
