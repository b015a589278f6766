#pragma once
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "q8/common.hpp"

namespace q8 {

// Fixed capacity for extension degrees; p^r <= 2^32 keeps r small at any p >= 3.
constexpr unsigned kMaxExtDegree = 8;

using FqCoords = std::array<uint64_t, kMaxExtDegree>;

// F_{p^r} = F_p[x]/(modulus), modulus = x^r + sum_t tail[t] x^t monic irreducible.
// The modulus is found by a deterministic search: candidates are enumerated by
// writing n = 0, 1, 2, ... in base p as (tail[r-1] ... tail[0]) and taking the
// first irreducible one, so cached point counts are reproducible bit for bit.
class FqContext {
 public:
  static std::shared_ptr<const FqContext> make(uint64_t p, unsigned r);
  // Same search, skipping the first `skip` irreducible candidates (test hook for
  // checking that counts do not depend on the modulus).
  static std::shared_ptr<const FqContext> make_alternative(uint64_t p, unsigned r, unsigned skip);

  uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus_tail() const { return tail_; }
  std::string modulus_id() const;  // "p^r:tail[r-1],...,tail[0]"

  FqCoords zero() const;
  FqCoords one() const;
  FqCoords from_int(uint64_t v) const;  // reduction of an integer (prime subfield)
  bool is_zero(const FqCoords& a) const;
  bool equal(const FqCoords& a, const FqCoords& b) const;

  FqCoords add(const FqCoords& a, const FqCoords& b) const;
  FqCoords sub(const FqCoords& a, const FqCoords& b) const;
  FqCoords neg(const FqCoords& a) const;
  FqCoords mul(const FqCoords& a, const FqCoords& b) const;
  FqCoords pow(FqCoords base, uint64_t e) const;

  // Enumeration index: sum coords[t] p^t, a bijection [0, q) <-> F_q.
  uint64_t index_of(const FqCoords& a) const;
  FqCoords from_index(uint64_t idx) const;

 private:
  FqContext(uint64_t p, unsigned r, std::vector<uint64_t> tail);
  uint64_t p_, q_;
  unsigned r_;
  std::vector<uint64_t> tail_;
};

// Value type fulfilling the element contract (p, r, modulus, reduced coords).
struct FiniteFieldElement {
  std::shared_ptr<const FqContext> ctx;
  FqCoords coords{};

  static FiniteFieldElement make(std::shared_ptr<const FqContext> ctx, uint64_t v) {
    return {ctx, ctx->from_int(v)};
  }
  bool is_zero() const { return ctx->is_zero(coords); }
  FiniteFieldElement operator*(const FiniteFieldElement& o) const {
    return {ctx, ctx->mul(coords, o.coords)};
  }
  bool operator==(const FiniteFieldElement& o) const { return ctx->equal(coords, o.coords); }
};

// 0 on zero, +1 on nonzero squares, -1 otherwise, via x^((q-1)/2); p odd.
int quadratic_character(const FiniteFieldElement& x);

}  // namespace q8
