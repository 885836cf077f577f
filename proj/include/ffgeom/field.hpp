#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffgeom/error.hpp"

namespace ffgeom {

/// Element of GF(p^k) encoded by its index in [0, q). For k = 1 the index is
/// the residue; for k > 1 it is the base-p digit vector of the polynomial
/// coefficients, constant term in the lowest digit.
struct Fe {
  std::uint32_t v = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint32_t value) : v(value) {}

  friend constexpr auto operator<=>(Fe, Fe) = default;
};

enum class ArithOp { Add, Sub, Mul, Inv, Neg };

/// Exact arithmetic context for GF(p^k), immutable after construction.
///
/// Multiplication uses log/antilog tables over a primitive element for k > 1;
/// prime fields multiply directly. Subtraction/addition for k > 1 use XOR
/// (p = 2), a q*q table (q <= 2048), or digit-wise reduction otherwise.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws NonPrime, DegreeMismatch, ReduciblePolynomial, FieldTooLarge.
  /// Modulus is low-degree-first and monic (last coefficient 1).
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k,
                                           std::optional<std::vector<std::uint32_t>> modulus = {});

  /// Parses "p", "p^k", optionally followed by " modulus=c0,c1,...,ck".
  static std::shared_ptr<const Field> parse(const std::string& spec);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// "p^k" with " modulus=..." appended when k > 1. Round-trips through parse().
  std::string spec() const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  bool contains(Fe a) const { return a.v < q_; }
  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }

  Fe add(Fe a, Fe b) const {
    if (kind_ == Kind::Prime) {
      const std::uint32_t s = a.v + b.v;
      return Fe{s >= p_ ? s - p_ : s};
    }
    if (kind_ == Kind::Binary) return Fe{a.v ^ b.v};
    if (!add_table_.empty()) return Fe{add_table_[a.v * q_ + b.v]};
    return Fe{digitwise(a.v, b.v, false)};
  }

  Fe sub(Fe a, Fe b) const {
    if (kind_ == Kind::Prime) return Fe{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    if (kind_ == Kind::Binary) return Fe{a.v ^ b.v};
    if (!add_table_.empty()) return Fe{add_table_[a.v * q_ + neg_table_[b.v]]};
    return Fe{digitwise(a.v, b.v, true)};
  }

  Fe neg(Fe a) const {
    if (kind_ == Kind::Prime) return Fe{a.v == 0 ? 0 : p_ - a.v};
    if (kind_ == Kind::Binary) return a;
    return Fe{neg_table_[a.v]};
  }

  Fe mul(Fe a, Fe b) const {
    if (kind_ == Kind::Prime)
      return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    if (a.v == 0 || b.v == 0) return Fe{0};
    return Fe{exp_[log_[a.v] + log_[b.v]]};
  }

  /// Unchecked; a must be nonzero.
  Fe inv_unchecked(Fe a) const { return Fe{inv_table_[a.v]}; }

  /// Throws ZeroInverse.
  Fe inv(Fe a) const;

  Fe pow(Fe a, std::uint64_t e) const;

  /// Checked entry point: validates both operands belong to this field
  /// (FieldMismatch) and that inverses are of nonzero elements (ZeroInverse).
  /// Unary ops ignore b.
  Fe apply(ArithOp op, Fe a, Fe b = Fe{0}) const;

  /// Base-p coefficient digits of a, low degree first, length k.
  std::vector<std::uint32_t> digits(Fe a) const;
  Fe from_digits(const std::vector<std::uint32_t>& digits) const;

  /// A fixed generator of the multiplicative group.
  Fe primitive() const { return Fe{exp_.empty() ? primitive_ : exp_[1]}; }

 private:
  enum class Kind { Prime, Binary, Extension };

  Field() = default;
  void build_tables();
  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  Kind kind_ = Kind::Prime;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> inv_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so log a + log b indexes directly
  std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Irreducibility over GF(p) of a monic polynomial (low-degree-first), by trial
/// division with every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Lexicographically smallest (low-degree-first comparison) monic irreducible
/// polynomial of degree k over GF(p).
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

}  // namespace ffgeom
