#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "q8/frobenius.hpp"
#include "q8/monodromy.hpp"

using namespace q8;

namespace {

RatPoly rp(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly{std::move(c)};
}

const RatPoly g41 = rp({1, -2, -30, -82, 1681});               // p = 41
const RatPoly g73 = rp({1, 8, -2, 584, 5329});                 // p = 73
const RatPoly g13 = rp({1, -2, 0, 26, -169});                  // p = 13
const RatPoly g17_6 = rp({1, -2, -13, 44, -221, -578, 4913});  // g = 6, p = 17
const RatPoly g41_6 = rp({1, -14, 91, -540, 3731, -23534, 68921});  // g = 6, p = 41

OmegaDatum datum(long p, int omega) { return OmegaDatum{Integer(p), omega, {}}; }

template <typename F>
Err code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Err::InternalError;
}

}  // namespace

TEST_CASE("omega character from the leading coefficient") {
  CHECK(omega_of_frobenius(g41, Integer(41), 4) == 1);
  CHECK(omega_of_frobenius(g73, Integer(73), 4) == 1);
  CHECK(omega_of_frobenius(g13, Integer(13), 4) == -1);
  CHECK(omega_of_frobenius(g17_6, Integer(17), 6) == 1);
  CHECK(omega_of_frobenius(g41_6, Integer(41), 6) == 1);

  // p = 3 mod 4 carries no character value
  CHECK(code_of([] { omega_of_frobenius(rp({1, 0, 0, 0, 49}), Integer(7), 4); }) ==
        Err::PreconditionFailed);
  CHECK(code_of([] { omega_of_frobenius(g41, Integer(41), 6); }) == Err::PreconditionFailed);
  CHECK(code_of([] { omega_of_frobenius(rp({2, 0, 0, 0, 1681}), Integer(41), 4); }) ==
        Err::PreconditionFailed);
  CHECK(code_of([] { omega_of_frobenius(rp({1, 0, 0, 1}), Integer(13), 3); }) ==
        Err::PreconditionFailed);
  CHECK(code_of([] { omega_of_frobenius(g41, Integer(15), 4); }) == Err::PreconditionFailed);
  CHECK(code_of([] { omega_of_frobenius(rp({1, 0, 0, 0, 1682}), Integer(41), 4); }) ==
        Err::WeilShapeViolated);
}

TEST_CASE("candidate fields from a bad prime set") {
  auto c23 = candidate_fields({Integer(2), Integer(3)});
  REQUIRE(c23.size() == 3);
  CHECK(c23[0] == CandidateField{Integer(1), true});
  CHECK(c23[1] == CandidateField{Integer(3), false});
  CHECK(c23[2] == CandidateField{Integer(3), true});
  CHECK(c23[0].field_name() == "Q(zeta8)");
  CHECK(c23[1].field_name() == "Q(i,sqrt(3))");
  CHECK(c23[2].field_name() == "Q(i,sqrt(3i))");

  auto c2 = candidate_fields({Integer(2)});
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].field_name() == "Q(zeta8)");

  // 2 contributes nothing beyond the always-present i direction
  CHECK(candidate_fields({Integer(3)}) == c23);
  CHECK(candidate_fields({Integer(3), Integer(2), Integer(3)}) == c23);

  auto c25 = candidate_fields({Integer(2), Integer(5)});
  REQUIRE(c25.size() == 3);
  CHECK(c25[1] == CandidateField{Integer(5), false});

  auto c235 = candidate_fields({Integer(2), Integer(3), Integer(5)});
  CHECK(c235.size() == 7);
  CHECK(std::count(c235.begin(), c235.end(), CandidateField{Integer(15), true}) == 1);

  CHECK(code_of([] { candidate_fields({Integer(6)}); }) == Err::DegenerateInput);
}

TEST_CASE("complete splitting in the candidate fields") {
  auto c = candidate_fields({Integer(2), Integer(3)});
  const auto& zeta8 = c[0];
  const auto& sqrt3 = c[1];
  const auto& sqrt3i = c[2];

  CHECK_FALSE(splits_completely(Integer(13), zeta8));
  CHECK(splits_completely(Integer(41), zeta8));
  CHECK(splits_completely(Integer(73), zeta8));
  CHECK(splits_completely(Integer(13), sqrt3));
  CHECK_FALSE(splits_completely(Integer(41), sqrt3));
  CHECK(splits_completely(Integer(73), sqrt3));
  CHECK_FALSE(splits_completely(Integer(13), sqrt3i));
  CHECK_FALSE(splits_completely(Integer(41), sqrt3i));
  CHECK(splits_completely(Integer(73), sqrt3i));

  for (long p : {7L, 11L, 19L, 23L})
    for (const auto& f : c) CHECK_FALSE(splits_completely(Integer(p), f));

  CHECK(code_of([&] { splits_completely(Integer(2), zeta8); }) == Err::RamifiedPrime);
  CHECK(code_of([&] { splits_completely(Integer(3), sqrt3); }) == Err::RamifiedPrime);
  CHECK(code_of([&] { splits_completely(Integer(3), sqrt3i); }) == Err::RamifiedPrime);
  CHECK(splits_completely(Integer(5), sqrt3) == false);  // 5 = 1 mod 4, chi_5(3) = -1
  CHECK(code_of([&] { splits_completely(Integer(15), zeta8); }) == Err::DegenerateInput);

  // the eighth cyclotomic field splits exactly the primes 1 mod 8
  for (long p : primes_up_to(1000)) {
    if (p == 2) continue;
    CHECK(splits_completely(Integer(p), zeta8) == (p % 8 == 1));
  }
}

TEST_CASE("identification of the connected monodromy field") {
  auto cands = candidate_fields({Integer(2), Integer(3)});
  auto name_of = [](const MonodromyIdentification& r) { return r.field->field_name(); };

  auto full = identify_connected_monodromy_field(
      {datum(13, -1), datum(41, 1), datum(73, 1)}, cands);
  REQUIRE(full.status == IdentifyStatus::Identified);
  CHECK(name_of(full) == "Q(zeta8)");
  REQUIRE(full.eliminated.size() == 2);
  CHECK(full.eliminated[0].field.field_name() == "Q(i,sqrt(3))");
  CHECK(full.eliminated[0].witness_p == 13);
  CHECK(full.eliminated[1].field.field_name() == "Q(i,sqrt(3i))");
  CHECK(full.eliminated[1].witness_p == 41);

  // the character value at 41 already separates all three candidates
  auto only41 = identify_connected_monodromy_field({datum(41, 1)}, cands);
  REQUIRE(only41.status == IdentifyStatus::Identified);
  CHECK(name_of(only41) == "Q(zeta8)");
  auto pair41 = identify_connected_monodromy_field({datum(13, -1), datum(41, 1)}, cands);
  REQUIRE(pair41.status == IdentifyStatus::Identified);
  CHECK(name_of(pair41) == "Q(zeta8)");

  // 73 splits in every candidate, so a lone +1 there separates nothing
  auto only73 = identify_connected_monodromy_field({datum(73, 1)}, cands);
  CHECK(only73.status == IdentifyStatus::Inconclusive);
  CHECK(only73.survivors.size() == 3);
  CHECK(only73.eliminated.empty());

  auto other = identify_connected_monodromy_field(
      {datum(41, -1), datum(13, -1), datum(73, 1)}, cands);
  REQUIRE(other.status == IdentifyStatus::Identified);
  CHECK(name_of(other) == "Q(i,sqrt(3i))");

  auto third = identify_connected_monodromy_field({datum(13, 1)}, cands);
  REQUIRE(third.status == IdentifyStatus::Identified);
  CHECK(name_of(third) == "Q(i,sqrt(3))");

  auto none = identify_connected_monodromy_field({datum(41, -1), datum(73, -1)}, cands);
  CHECK(none.status == IdentifyStatus::NoCandidate);
  CHECK(none.survivors.empty());
  CHECK(none.eliminated.size() == 3);

  CHECK(code_of([&] { identify_connected_monodromy_field({}, cands); }) ==
        Err::PreconditionFailed);
  CHECK(code_of([&] { identify_connected_monodromy_field({datum(41, 0)}, cands); }) ==
        Err::DegenerateInput);
  CHECK(code_of([&] { identify_connected_monodromy_field({datum(3, 1)}, cands); }) ==
        Err::RamifiedPrime);
}

TEST_CASE("irreducibility of Weil polynomials over the rationals") {
  CHECK(weil_irreducible(g41, Integer(41)));
  CHECK(weil_irreducible(g73, Integer(73)));
  CHECK(weil_irreducible(g17_6, Integer(17)));
  CHECK(weil_irreducible(g41_6, Integer(41)));
  CHECK(weil_irreducible(rp({1, -2, 13}), Integer(13)));
  CHECK(weil_irreducible(rp({1, 0, -13}), Integer(13)));
  CHECK(weil_irreducible(rp({1, 0, 0, 0, 25}), Integer(5)));

  CHECK_FALSE(weil_irreducible(g13, Integer(13)));  // (1 - 2T + 13T^2)(1 - 13T^2)
  CHECK_FALSE(weil_irreducible(rp({1, -42, 41}), Integer(41)));  // (1 - T)(1 - 41T)
  CHECK_FALSE(weil_irreducible(rp({1, 0, 0, 0, 4}), Integer(2)));  // conjugate quadratic pair

  CHECK(code_of([] { weil_irreducible(rp({1, 0, 0, 0, 0, 0, 0, 0, 1}), Integer(3)); }) ==
        Err::Unsupported);
  CHECK(code_of([] { weil_irreducible(rp({2, 0, 8}), Integer(2)); }) == Err::PreconditionFailed);
  CHECK(code_of([] { weil_irreducible(g41, Integer(15)); }) == Err::PreconditionFailed);
}

TEST_CASE("real subfield polynomials and their discriminant kernels") {
  auto r41 = real_subfield_poly(g41, Integer(41));
  CHECK(r41 == rp({-112, -2, 1}));
  CHECK(*squarefree_part(numer(discriminant(r41))) == 113);

  auto r73 = real_subfield_poly(g73, Integer(73));
  CHECK(r73 == rp({-148, 8, 1}));
  CHECK(*squarefree_part(numer(discriminant(r73))) == 41);

  auto r17 = real_subfield_poly(g17_6, Integer(17));
  CHECK(r17 == rp({112, -64, -2, 1}));
  CHECK(*squarefree_part(numer(discriminant(r17))) == 3859);  // 17 * 227

  auto r41_6 = real_subfield_poly(g41_6, Integer(41));
  CHECK(r41_6 == rp({608, -32, -14, 1}));
  CHECK(*squarefree_part(numer(discriminant(r41_6))) == 1882);  // 2 * 941

  // minus-type functional equation has no real subfield in this sense
  CHECK(code_of([] { real_subfield_poly(g13, Integer(13)); }) == Err::PreconditionFailed);
  CHECK(code_of([] { real_subfield_poly(rp({1, -2, 13}), Integer(13)); }) == Err::Unsupported);
}

TEST_CASE("quadratic subfields of quartic Weil fields") {
  CHECK(quadratic_subfield_kernels(g41, Integer(41)) == std::vector<Integer>{Integer(113)});
  CHECK(quadratic_subfield_kernels(g73, Integer(73)) == std::vector<Integer>{Integer(41)});

  // biquadratic example: all three quadratic subfields recovered
  auto toy = quadratic_subfield_kernels(rp({1, 0, 0, 0, 25}), Integer(5));
  CHECK(toy == std::vector<Integer>{Integer(-10), Integer(-1), Integer(10)});

  CHECK(code_of([] { quadratic_subfield_kernels(g17_6, Integer(17)); }) == Err::Unsupported);
  CHECK(code_of([] { quadratic_subfield_kernels(g13, Integer(13)); }) ==
        Err::PreconditionFailed);
}

TEST_CASE("trivial center certificate for the quartic pair") {
  auto cert = center_certificate(g41, Integer(41), g73, Integer(73));
  CHECK(cert.certified);
  CHECK(cert.reason.empty());
  CHECK(cert.real_kernel_1 == 113);
  CHECK(cert.real_kernel_2 == 41);
  CHECK(cert.quadratic_subfields_1 == std::vector<Integer>{Integer(113)});
  CHECK(cert.quadratic_subfields_2 == std::vector<Integer>{Integer(41)});
  REQUIRE(cert.witness_not_isomorphic.has_value());
  CHECK(*cert.witness_not_isomorphic == 5);
  REQUIRE(cert.witness_no_common_quadratic.has_value());
  CHECK(*cert.witness_no_common_quadratic == 5);
  CHECK_FALSE(cert.witness_no_common_cubic.has_value());

  auto swapped = center_certificate(g73, Integer(73), g41, Integer(41));
  CHECK(swapped.certified);
  CHECK(swapped.real_kernel_1 == 41);
  CHECK(swapped.real_kernel_2 == 113);

  auto same = center_certificate(g41, Integer(41), g41, Integer(41));
  CHECK_FALSE(same.certified);
  CHECK(same.reason == "shared quadratic subfield kernels");
  CHECK_FALSE(same.witness_not_isomorphic.has_value());

  CHECK(code_of([] { center_certificate(g13, Integer(13), g41, Integer(41)); }) ==
        Err::NotSimpleInput);
  CHECK(code_of([] { center_certificate(g41, Integer(41), g17_6, Integer(17)); }) ==
        Err::DegenerateInput);
  CHECK(code_of([] {
          center_certificate(rp({1, -2, 13}), Integer(13), rp({1, 2, 13}), Integer(13));
        }) == Err::Unsupported);
}

TEST_CASE("trivial center certificate for the sextic pair") {
  auto cert = center_certificate(g17_6, Integer(17), g41_6, Integer(41));
  CHECK(cert.certified);
  CHECK(cert.real_kernel_1 == 3859);
  CHECK(cert.real_kernel_2 == 1882);
  CHECK(cert.quadratic_subfields_1.empty());
  REQUIRE(cert.witness_not_isomorphic.has_value());
  CHECK(*cert.witness_not_isomorphic == 5);
  REQUIRE(cert.witness_no_common_quadratic.has_value());
  CHECK(*cert.witness_no_common_quadratic == 19);
  REQUIRE(cert.witness_no_common_cubic.has_value());
  CHECK(*cert.witness_no_common_cubic == 5);

  auto same = center_certificate(g17_6, Integer(17), g17_6, Integer(17));
  CHECK_FALSE(same.certified);
  CHECK_FALSE(same.witness_not_isomorphic.has_value());
  CHECK(same.reason.find("isomorphism") != std::string::npos);
}

TEST_CASE("endomorphism algebra verdict from two good primes") {
  auto counts_for = [](long p) {
    std::map<unsigned, Integer> counts;
    for (unsigned r = 1; r <= 3; ++r)
      counts[r] = count_points(4, {Rational(1, 2)}, Integer(p), r);
    return counts;
  };
  auto r41 = analyze_frobenius(counts_for(41), Integer(41), 4, FitAnsatz::Square, 8);
  auto r73 = analyze_frobenius(counts_for(73), Integer(73), 4, FitAnsatz::Square, 8);
  CHECK(r41.c == g41 * g41);
  CHECK(r73.c == g73 * g73);
  CHECK(r41.endo_field_degree == 1);
  CHECK(r73.endo_field_degree == 1);
  CHECK(r41.endo_dims.at(1) == 16);
  CHECK(r73.endo_dims.at(1) == 16);

  auto cert = center_certificate(g41, Integer(41), g73, Integer(73));
  CHECK(endo_algebra_verdict(r41, r73, cert) == EndoVerdict::QuaternionAlgebraOverQ);
  CHECK(endo_algebra_verdict(r41) == EndoVerdict::Inconclusive);

  CenterCertificate uncertified;
  CHECK(endo_algebra_verdict(r41, r73, uncertified) == EndoVerdict::Inconclusive);

  auto weakened = r41;
  weakened.endo_dims[1] = 15;
  CHECK(endo_algebra_verdict(weakened, r73, cert) == EndoVerdict::Inconclusive);
}
