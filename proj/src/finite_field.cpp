#include "q8/finite_field.hpp"

#include <algorithm>

#include "q8/rational.hpp"

#include "fp_poly.hpp"

namespace q8 {

using fppoly::FpPoly;
using fppoly::irreducible;
using fppoly::mulmod;

namespace {

std::vector<uint64_t> search_modulus(uint64_t p, unsigned r, unsigned skip) {
  // Enumerate tails by base-p digits of n (tail[t] = digit t); first irreducible
  // monic x^r + tail wins. `skip` skips that many irreducible hits.
  for (Integer n = 0;; ++n) {
    std::vector<uint64_t> tail(r, 0);
    Integer v = n;
    bool overflow = false;
    for (unsigned t = 0; t < r; ++t) {
      Integer digit = v % (unsigned long)p;
      tail[t] = digit.get_ui();
      v /= (unsigned long)p;
    }
    if (v != 0) overflow = true;
    if (overflow) fail(Err::SearchExhausted, "no irreducible modulus found");
    FpPoly candidate(tail.begin(), tail.end());
    candidate.push_back(1);
    if (irreducible(candidate, p)) {
      if (skip == 0) return tail;
      --skip;
    }
  }
}

}  // namespace

FqContext::FqContext(uint64_t p, unsigned r, std::vector<uint64_t> tail)
    : p_(p), r_(r), tail_(std::move(tail)) {
  q_ = 1;
  for (unsigned t = 0; t < r_; ++t) q_ *= p_;
}

std::shared_ptr<const FqContext> FqContext::make(uint64_t p, unsigned r) {
  return make_alternative(p, r, 0);
}

std::shared_ptr<const FqContext> FqContext::make_alternative(uint64_t p, unsigned r,
                                                             unsigned skip) {
  require(r >= 1 && r <= kMaxExtDegree, Err::Unsupported, "extension degree out of range");
  require(p >= 2, Err::DegenerateInput, "characteristic must be prime");
  require(is_prime(Integer((unsigned long)p)), Err::DegenerateInput, "p is not prime");
  auto tail = search_modulus(p, r, skip);
  return std::shared_ptr<const FqContext>(new FqContext(p, r, std::move(tail)));
}

std::string FqContext::modulus_id() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(r_) + ":";
  for (unsigned t = r_; t-- > 0;) {
    s += std::to_string(tail_[t]);
    if (t) s += ",";
  }
  return s;
}

FqCoords FqContext::zero() const { return FqCoords{}; }

FqCoords FqContext::one() const {
  FqCoords a{};
  a[0] = 1 % p_;
  return a;
}

FqCoords FqContext::from_int(uint64_t v) const {
  FqCoords a{};
  a[0] = v % p_;
  return a;
}

bool FqContext::is_zero(const FqCoords& a) const {
  for (unsigned t = 0; t < r_; ++t)
    if (a[t]) return false;
  return true;
}

bool FqContext::equal(const FqCoords& a, const FqCoords& b) const {
  for (unsigned t = 0; t < r_; ++t)
    if (a[t] != b[t]) return false;
  return true;
}

FqCoords FqContext::add(const FqCoords& a, const FqCoords& b) const {
  FqCoords r{};
  for (unsigned t = 0; t < r_; ++t) {
    uint64_t s = a[t] + b[t];
    r[t] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FqCoords FqContext::sub(const FqCoords& a, const FqCoords& b) const {
  FqCoords r{};
  for (unsigned t = 0; t < r_; ++t) {
    uint64_t s = a[t] + p_ - b[t];
    r[t] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FqCoords FqContext::neg(const FqCoords& a) const { return sub(zero(), a); }

FqCoords FqContext::mul(const FqCoords& a, const FqCoords& b) const {
  if (r_ == 1) {
    FqCoords r{};
    r[0] = mulmod(a[0], b[0], p_);
    return r;
  }
  uint64_t prod[2 * kMaxExtDegree] = {0};
  for (unsigned i = 0; i < r_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < r_; ++j)
      prod[i + j] = (prod[i + j] + (unsigned __int128)a[i] * b[j]) % p_;
  }
  for (unsigned k = 2 * r_ - 1; k >= r_; --k) {
    uint64_t top = prod[k];
    if (!top) continue;
    prod[k] = 0;
    for (unsigned t = 0; t < r_; ++t) {
      uint64_t s = mulmod(top, tail_[t], p_);
      prod[k - r_ + t] = (prod[k - r_ + t] + p_ - s) % p_;
    }
  }
  FqCoords r{};
  for (unsigned t = 0; t < r_; ++t) r[t] = prod[t];
  return r;
}

FqCoords FqContext::pow(FqCoords base, uint64_t e) const {
  FqCoords acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t FqContext::index_of(const FqCoords& a) const {
  uint64_t idx = 0;
  for (unsigned t = r_; t-- > 0;) idx = idx * p_ + a[t];
  return idx;
}

FqCoords FqContext::from_index(uint64_t idx) const {
  FqCoords a{};
  for (unsigned t = 0; t < r_; ++t) {
    a[t] = idx % p_;
    idx /= p_;
  }
  return a;
}

int quadratic_character(const FiniteFieldElement& x) {
  const FqContext& ctx = *x.ctx;
  require(ctx.p() != 2, Err::UnsupportedCharacteristic, "quadratic character needs odd p");
  if (ctx.is_zero(x.coords)) return 0;
  FqCoords v = ctx.pow(x.coords, (ctx.q() - 1) / 2);
  if (ctx.equal(v, ctx.one())) return 1;
  return -1;
}

}  // namespace q8
