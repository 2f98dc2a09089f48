#include "censym/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "censym/errors.hpp"

namespace censym {

namespace detail {

struct RingData {
  RingKind kind;
  std::string literal;
  mpz_class modulus;               // modular only
  const RingData* base = nullptr;  // group ring only
  const RingData* leaf = nullptr;
  int depth = 0;
  bool field = false;
};

}  // namespace detail

namespace {

using detail::RingData;

// Rings are interned by canonical literal and never freed, so a Ring is a
// plain pointer and equality is pointer equality.
const RingData* intern(RingData proto) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<RingData>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(proto.literal);
  if (it != registry.end()) return it->second.get();
  auto owned = std::make_unique<RingData>(std::move(proto));
  RingData* raw = owned.get();
  if (raw->kind != RingKind::group_ring_c2) raw->leaf = raw;
  registry.emplace(raw->literal, std::move(owned));
  return raw;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("malformed integer literal '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

// Removes one pair of parentheses when they enclose the whole string.
std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')') --depth;
      if (depth == 0 && k + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::size_t width(const RingData* d) { return std::size_t{1} << d->depth; }

}  // namespace

bool is_prime(const mpz_class& value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (mpz_class d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

// --- Ring -----------------------------------------------------------------

Ring::Ring() : Ring(integers()) {}

Ring Ring::integers() {
  static const RingData* d = intern({RingKind::integer, "int", 0, nullptr, nullptr, 0, false});
  return Ring(d);
}

Ring Ring::rationals() {
  static const RingData* d = intern({RingKind::rational, "rat", 0, nullptr, nullptr, 0, true});
  return Ring(d);
}

Ring Ring::modular(const mpz_class& modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be at least 2, got " + modulus.get_str());
  const bool prime = is_prime(modulus);
  RingData proto{RingKind::modular, (prime ? "gf:" : "zmod:") + modulus.get_str(), modulus, nullptr, nullptr, 0, prime};
  return Ring(intern(std::move(proto)));
}

Ring Ring::group_ring_c2(const Ring& base) {
  RingData proto{RingKind::group_ring_c2, "c2:" + base.literal(), 0, base.d_, base.d_->leaf, base.d_->depth + 1, false};
  return Ring(intern(std::move(proto)));
}

Ring Ring::parse(std::string_view literal) {
  const std::string_view s = trim(literal);
  if (s == "int") return integers();
  if (s == "rat") return rationals();
  if (s.starts_with("zmod:")) return modular(parse_integer(s.substr(5)));
  if (s.starts_with("gf:")) {
    const mpz_class p = parse_integer(s.substr(3));
    if (!is_prime(p)) throw ParseError("gf:" + p.get_str() + " requires a prime");
    return modular(p);
  }
  if (s.starts_with("c2:")) return group_ring_c2(parse(s.substr(3)));
  throw ParseError("unknown ring literal '" + std::string(s) + "'");
}

RingKind Ring::kind() const { return d_->kind; }

const mpz_class& Ring::modulus() const {
  if (d_->kind != RingKind::modular) throw PreconditionError(d_->literal + " has no modulus");
  return d_->modulus;
}

Ring Ring::base() const {
  if (d_->kind != RingKind::group_ring_c2) throw PreconditionError(d_->literal + " is not a group ring");
  return Ring(d_->base);
}

Ring Ring::leaf() const { return Ring(d_->leaf); }
int Ring::depth() const { return d_->depth; }
bool Ring::is_field() const { return d_->field; }
bool Ring::is_finite() const { return d_->leaf->kind == RingKind::modular; }

mpz_class Ring::cardinality() const {
  if (!is_finite()) throw PreconditionError(d_->literal + " is infinite");
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), d_->leaf->modulus.get_mpz_t(), width(d_));
  return result;
}

const std::string& Ring::literal() const { return d_->literal; }

RingElt Ring::zero() const { return RingElt(*this, std::vector<mpq_class>(width(d_)), RingElt::Raw{}); }

RingElt Ring::one() const { return from_int(1); }

RingElt Ring::from_int(long value) const { return from_integer(mpz_class(value)); }

RingElt Ring::from_integer(const mpz_class& value) const {
  std::vector<mpq_class> c(width(d_));
  c[0] = value;
  return RingElt(*this, std::move(c));
}

RingElt Ring::from_rational(const mpq_class& value) const {
  if (d_->kind != RingKind::rational) throw PreconditionError("fractions only exist in rat, not " + d_->literal);
  return RingElt(*this, {value});
}

RingElt Ring::generator() const {
  if (d_->kind != RingKind::group_ring_c2) throw PreconditionError(d_->literal + " has no generator x");
  std::vector<mpq_class> c(width(d_));
  c[width(d_) / 2] = 1;
  return RingElt(*this, std::move(c));
}

RingElt Ring::parse_element(std::string_view literal) const {
  std::string_view s = strip_parens(trim(literal));
  if (s.empty()) throw ParseError("empty element literal for " + d_->literal);
  switch (d_->kind) {
    case RingKind::integer:
    case RingKind::modular:
      return from_integer(parse_integer(s));
    case RingKind::rational: {
      const auto slash = s.find('/');
      if (slash == std::string_view::npos) return from_integer(parse_integer(s));
      const mpz_class num = parse_integer(trim(s.substr(0, slash)));
      const std::string_view den_text = trim(s.substr(slash + 1));
      if (!den_text.empty() && den_text.front() == '-') throw ParseError("negative denominator in '" + std::string(s) + "'");
      const mpz_class den = parse_integer(den_text);
      if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return from_rational(q);
    }
    case RingKind::group_ring_c2: {
      const Ring base_ring(d_->base);
      std::string_view a_text = "0";
      std::string_view bx_text;
      if (s.back() != 'x') {
        a_text = s;
      } else {
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (s[k] == '(') ++depth;
          if (s[k] == ')') --depth;
          if (s[k] == '+' && depth == 0 && k > 0) {
            split = k;
            break;
          }
        }
        if (split != std::string_view::npos) {
          a_text = trim(s.substr(0, split));
          bx_text = trim(s.substr(split + 1));
        } else {
          bx_text = s;
        }
      }
      RingElt b = base_ring.zero();
      if (!bx_text.empty()) {
        if (bx_text == "x") {
          b = base_ring.one();
        } else if (bx_text == "-x") {
          b = -base_ring.one();
        } else if (bx_text.size() > 2 && bx_text.ends_with("*x")) {
          b = base_ring.parse_element(bx_text.substr(0, bx_text.size() - 2));
        } else {
          throw ParseError("malformed group-ring literal '" + std::string(s) + "'");
        }
      }
      return RingElt::combine(base_ring.parse_element(a_text), b);
    }
  }
  throw ParseError("unreachable");
}

RingElt Ring::random(std::mt19937_64& rng) const {
  std::vector<mpq_class> c(width(d_));
  const RingData* leaf = d_->leaf;
  for (auto& coeff : c) {
    switch (leaf->kind) {
      case RingKind::integer:
        coeff = static_cast<long>(rng() % 7) - 3;
        break;
      case RingKind::rational:
        coeff = mpq_class(static_cast<long>(rng() % 9) - 4, static_cast<unsigned long>(rng() % 3 + 1));
        coeff.canonicalize();
        break;
      case RingKind::modular: {
        // Enough random bits to make the residue close to uniform.
        mpz_class bits = 0;
        const std::size_t words = mpz_sizeinbase(leaf->modulus.get_mpz_t(), 2) / 64 + 2;
        for (std::size_t w = 0; w < words; ++w) {
          bits <<= 64;
          bits += mpz_class(std::to_string(rng()));
        }
        coeff = mpz_class(bits % leaf->modulus);
        break;
      }
      case RingKind::group_ring_c2:
        break;
    }
  }
  return RingElt(*this, std::move(c));
}

std::vector<RingElt> Ring::elements() const {
  if (!is_finite()) throw PreconditionError(d_->literal + " is infinite");
  const std::size_t w = width(d_);
  const unsigned long m = d_->leaf->modulus.get_ui();
  std::vector<RingElt> out;
  std::vector<unsigned long> digits(w, 0);
  while (true) {
    std::vector<mpq_class> c(w);
    for (std::size_t k = 0; k < w; ++k) c[k] = digits[k];
    out.emplace_back(*this, std::move(c));
    std::size_t k = 0;
    while (k < w && ++digits[k] == m) digits[k++] = 0;
    if (k == w) break;
  }
  return out;
}

// --- RingElt --------------------------------------------------------------

RingElt::RingElt() : ring_(Ring::integers()), c_(1) {}

RingElt::RingElt(Ring ring, std::vector<mpq_class> coefficients) : ring_(ring), c_(std::move(coefficients)) {
  if (c_.size() != width(ring_.d_)) {
    throw DimensionError("element of " + ring_.literal() + " needs " + std::to_string(width(ring_.d_)) +
                         " coefficients, got " + std::to_string(c_.size()));
  }
  const RingData* leaf = ring_.d_->leaf;
  for (auto& q : c_) {
    q.canonicalize();
    if (leaf->kind != RingKind::rational && q.get_den() != 1) {
      throw PreconditionError("non-integral coefficient " + q.get_str() + " in " + ring_.literal());
    }
  }
  reduce();
}

void RingElt::reduce() {
  const RingData* leaf = ring_.d_->leaf;
  if (leaf->kind != RingKind::modular) return;
  for (auto& q : c_) {
    mpz_fdiv_r(q.get_num_mpz_t(), q.get_num_mpz_t(), leaf->modulus.get_mpz_t());
  }
}

bool RingElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool RingElt::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool RingElt::is_unit() const { return inverse().has_value(); }

std::optional<RingElt> RingElt::inverse() const {
  const RingData* d = ring_.d_;
  switch (d->kind) {
    case RingKind::integer:
      if (c_[0] == 1 || c_[0] == -1) return *this;
      return std::nullopt;
    case RingKind::rational:
      if (c_[0] == 0) return std::nullopt;
      return RingElt(ring_, {1 / c_[0]}, Raw{});
    case RingKind::modular: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), c_[0].get_num_mpz_t(), d->modulus.get_mpz_t()) == 0) return std::nullopt;
      return RingElt(ring_, {mpq_class(inv)});
    }
    case RingKind::group_ring_c2: {
      // (a + bx)(a - bx) = a^2 - b^2, and the norm is multiplicative, so
      // a + bx is a unit exactly when a^2 - b^2 is.
      auto [a, b] = split();
      const auto norm_inv = (a * a - b * b).inverse();
      if (!norm_inv) return std::nullopt;
      return combine(a * *norm_inv, -(b * *norm_inv));
    }
  }
  return std::nullopt;
}

std::pair<RingElt, RingElt> RingElt::split() const {
  const RingData* d = ring_.d_;
  if (d->kind != RingKind::group_ring_c2) throw PreconditionError(d->literal + " is not a group ring");
  const std::size_t half = c_.size() / 2;
  const Ring base(d->base);
  return {RingElt(base, std::vector<mpq_class>(c_.begin(), c_.begin() + half), Raw{}),
          RingElt(base, std::vector<mpq_class>(c_.begin() + half, c_.end()), Raw{})};
}

RingElt RingElt::combine(const RingElt& a, const RingElt& b) {
  if (!(a.ring_ == b.ring_)) throw RingMismatchError(a.ring_.literal(), b.ring_.literal());
  std::vector<mpq_class> c = a.c_;
  c.insert(c.end(), b.c_.begin(), b.c_.end());
  return RingElt(Ring::group_ring_c2(a.ring_), std::move(c), Raw{});
}

std::string RingElt::to_string() const {
  const RingData* d = ring_.d_;
  if (d->kind != RingKind::group_ring_c2) {
    return c_[0].get_den() == 1 ? c_[0].get_num().get_str() : c_[0].get_str();
  }
  auto [a, b] = split();
  const bool nested = d->base->kind == RingKind::group_ring_c2;
  const std::string sa = nested ? "(" + a.to_string() + ")" : a.to_string();
  const std::string sb = nested ? "(" + b.to_string() + ")" : b.to_string();
  return sa + "+" + sb + "*x";
}

RingElt& RingElt::operator+=(const RingElt& rhs) {
  if (!(ring_ == rhs.ring_)) throw RingMismatchError(ring_.literal(), rhs.ring_.literal());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  reduce();
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& rhs) {
  if (!(ring_ == rhs.ring_)) throw RingMismatchError(ring_.literal(), rhs.ring_.literal());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  reduce();
  return *this;
}

RingElt& RingElt::operator*=(const RingElt& rhs) { return *this = *this * rhs; }

RingElt operator*(const RingElt& a, const RingElt& b) {
  if (!(a.ring_ == b.ring_)) throw RingMismatchError(a.ring_.literal(), b.ring_.literal());
  const std::size_t w = a.c_.size();
  if (w == 1) {
    RingElt out(a.ring_, {a.c_[0] * b.c_[0]}, RingElt::Raw{});
    out.reduce();
    return out;
  }
  // Group algebra of (C2)^d: g_k * g_l = g_(k xor l).
  std::vector<mpq_class> c(w);
  for (std::size_t k = 0; k < w; ++k) {
    if (a.c_[k] == 0) continue;
    for (std::size_t l = 0; l < w; ++l) {
      if (b.c_[l] == 0) continue;
      c[k ^ l] += a.c_[k] * b.c_[l];
    }
  }
  RingElt out(a.ring_, std::move(c), RingElt::Raw{});
  out.reduce();
  return out;
}

RingElt operator-(RingElt a) {
  for (auto& q : a.c_) q = -q;
  a.reduce();
  return a;
}

bool operator==(const RingElt& a, const RingElt& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

RingElt arith(ArithOp op, const RingElt& a, const RingElt& b) {
  if (!(a.ring() == b.ring())) throw RingMismatchError(a.ring().literal(), b.ring().literal());
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::neg:
      return -a;
    case ArithOp::sub:
      return a - b;
  }
  throw std::logic_error("unknown ArithOp");
}

std::optional<RingElt> invert_two(const Ring& ring) { return ring.from_int(2).inverse(); }

}  // namespace censym
