#include "ffgeom/field.hpp"

#include <charconv>
#include <sstream>

namespace ffgeom {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero after trimming.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

std::uint32_t parse_uint(std::string_view text, const char* what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::ParseError, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree d in [1, deg/2].
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t x = n;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod(poly, cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  Poly poly(k + 1, 0);
  poly[k] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    // c0 is the most significant digit of n, so n ascending is lex order on (c0, c1, ...).
    std::uint64_t x = n;
    for (std::uint32_t i = 0; i < k; ++i) {
      poly[k - 1 - i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(Errc::ReduciblePolynomial, "no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::FieldTooLarge, "q exceeds 2^16");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  if (k > 1) {
    if (modulus) {
      auto& m = *modulus;
      if (m.size() != k + 1) throw Error(Errc::DegreeMismatch, "modulus must have k+1 coefficients");
      if (m.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
      for (auto c : m)
        if (c >= p) throw Error(Errc::DegreeMismatch, "modulus coefficient out of range");
      if (!is_irreducible(m, p)) throw Error(Errc::ReduciblePolynomial, "modulus is reducible");
      f->modulus_ = m;
    } else {
      f->modulus_ = default_modulus(p, k);
    }
    f->kind_ = p == 2 ? Kind::Binary : Kind::Extension;
  } else if (modulus && !modulus->empty()) {
    auto& m = *modulus;
    if (m.size() != 2 || m[1] != 1) throw Error(Errc::DegreeMismatch, "prime field modulus must be t + c");
    f->modulus_ = m;
  }
  f->build_tables();
  return f;
}

FieldPtr Field::parse(const std::string& spec) {
  std::istringstream in(spec);
  std::string head, token;
  in >> head;
  if (head.empty()) throw Error(Errc::ParseError, "empty field spec");
  if (head.rfind("q=", 0) == 0) head = head.substr(2);
  std::optional<std::vector<std::uint32_t>> modulus;
  while (in >> token) {
    if (token.rfind("modulus=", 0) != 0) throw Error(Errc::ParseError, "unexpected token '" + token + "'");
    std::vector<std::uint32_t> coeffs;
    std::string_view list(token);
    list.remove_prefix(8);
    while (!list.empty()) {
      const auto comma = list.find(',');
      coeffs.push_back(parse_uint(list.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    modulus = std::move(coeffs);
  }
  const auto caret = head.find('^');
  const std::uint32_t p = parse_uint(std::string_view(head).substr(0, caret), "characteristic");
  const std::uint32_t k =
      caret == std::string::npos ? 1 : parse_uint(std::string_view(head).substr(caret + 1), "exponent");
  return make(p, k, std::move(modulus));
}

std::string Field::spec() const {
  std::string s = std::to_string(p_);
  if (k_ > 1) {
    s += "^" + std::to_string(k_) + " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(modulus_[i]);
    }
  }
  return s;
}

void Field::build_tables() {
  pow_p_.assign(k_ + 1, 1);
  for (std::uint32_t i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const std::uint32_t d = a / pow_p_[i] % p_;
      r += ((p_ - d) % p_) * pow_p_[i];
    }
    neg_table_[a] = r;
  }

  if (k_ == 1) {
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = inv_mod(a, p_);
    for (std::uint32_t g = 1; g < q_; ++g) {
      std::uint64_t x = g;
      std::uint32_t order = 1;
      while (x != 1) {
        x = x * g % p_;
        ++order;
      }
      if (order == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
    return;
  }

  // Find a primitive element by walking powers with slow polynomial arithmetic.
  const std::uint32_t group = q_ - 1;
  std::vector<std::uint32_t> powers(group);
  for (std::uint32_t g = 2; g < q_; ++g) {
    const Poly gp = digits(Fe{g});
    Poly x{1};
    std::uint32_t order = 0;
    bool full = true;
    for (std::uint32_t e = 0; e < group; ++e) {
      Poly padded = x;
      padded.resize(k_, 0);
      const std::uint32_t idx = from_digits(padded).v;
      if (e > 0 && idx == 1) {
        full = false;
        break;
      }
      powers[e] = idx;
      x = poly_mulmod(x, gp, modulus_, p_);
      ++order;
    }
    if (full && order == group) {
      primitive_ = g;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(group));
  log_.assign(q_, 0);
  for (std::uint32_t e = 0; e < group; ++e) {
    exp_[e] = exp_[e + group] = powers[e];
    log_[powers[e]] = e;
  }
  inv_table_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = exp_[(group - log_[a]) % group];

  if (kind_ == Kind::Extension && q_ <= 2048) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(digitwise(a, b, false));
  }
}

std::uint32_t Field::digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    r += d * pow_p_[i];
  }
  return r;
}

Fe Field::inv(Fe a) const {
  if (a.v == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
  return inv_unchecked(a);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe result = one(), base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Fe Field::apply(ArithOp op, Fe a, Fe b) const {
  const bool unary = op == ArithOp::Inv || op == ArithOp::Neg;
  if (!contains(a) || (!unary && !contains(b)))
    throw Error(Errc::FieldMismatch, "operand is not an element of GF(" + std::to_string(q_) + ")");
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Inv: return inv(a);
    case ArithOp::Neg: return neg(a);
  }
  return a;
}

std::vector<std::uint32_t> Field::digits(Fe a) const {
  std::vector<std::uint32_t> d(k_);
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Fe Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  std::uint32_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * p_ + digits[i];
  return Fe{r};
}

}  // namespace ffgeom
