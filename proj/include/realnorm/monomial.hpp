#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "realnorm/errors.hpp"

namespace realnorm {

using Exponent = std::uint32_t;

/// Exponent vector indexed by an ambient variable list.
struct Monomial {
  std::vector<Exponent> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }

  std::uint64_t total_degree() const {
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

inline Exponent checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<Exponent>::max()) {
    throw Error(ErrorKind::unsupported_size, "exponent exceeds the supported word size");
  }
  return static_cast<Exponent>(e);
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r.exps[i] = checked_exponent(std::uint64_t{a.exps[i]} + b.exps[i]);
  return r;
}

enum class OrderKind { lex, grevlex, block };

/// A monomial order over a ranking of variable names (highest first).
/// `block` compares grevlex on ranking[0, split) and breaks ties with
/// grevlex on ranking[split, n); the first block is the one eliminated.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<std::string> ranking;
  std::size_t split = 0;

  static MonomialOrder lex(std::vector<std::string> ranking) {
    return {OrderKind::lex, std::move(ranking), 0};
  }
  static MonomialOrder grevlex(std::vector<std::string> ranking) {
    return {OrderKind::grevlex, std::move(ranking), 0};
  }
  static MonomialOrder block(std::vector<std::string> ranking, std::size_t split) {
    return {OrderKind::block, std::move(ranking), split};
  }

  bool operator==(const MonomialOrder&) const = default;

  /// Compares exponent vectors indexed by ranking position. Returns <0, 0, >0.
  int compare(std::span<const Exponent> a, std::span<const Exponent> b) const {
    switch (kind) {
      case OrderKind::lex:
        return compare_lex(a, b);
      case OrderKind::grevlex:
        return compare_grevlex(a, b);
      case OrderKind::block: {
        std::size_t k = std::min(split, a.size());
        int c = compare_grevlex(a.subspan(0, k), b.subspan(0, k));
        if (c != 0) return c;
        return compare_grevlex(a.subspan(k), b.subspan(k));
      }
    }
    return 0;
  }

  static int compare_lex(std::span<const Exponent> a, std::span<const Exponent> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  static int compare_grevlex(std::span<const Exponent> a, std::span<const Exponent> b) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

inline const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::block: return "block";
  }
  return "?";
}

}  // namespace realnorm
