#include <random>

#include "doctest.h"
#include "k2gr/cyclotomic.hpp"

using namespace k2gr;

namespace {

CycInt pi_elem(int p, Int mod = 0) {
  return CycInt::zeta(p, mod) - CycInt::one(p, mod);
}

RingElem random_elem(std::mt19937_64& rng, const std::shared_ptr<const Ring>& r) {
  std::uniform_int_distribution<long long> d(0, r->pk().convert_to<long long>() - 1);
  std::vector<Int> c(r->monomials());
  for (auto& x : c) x = d(rng);
  return r->from_coeffs(std::move(c));
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("power basis arithmetic folds the minimal polynomial") {
    // zeta^p = 1 and 1 + zeta + ... + zeta^(p-1) = 0
    for (int p : {3, 5, 7, 11, 13}) {
      CHECK(CycInt::zeta(p).pow(p) == CycInt::one(p));
      CycInt phi = CycInt::zero(p);
      for (int j = 0; j < p; ++j) phi = phi + CycInt::zeta(p).pow(j);
      CHECK(phi.is_zero());
    }
    // (zeta - 1)^2 = -3 zeta in Z[zeta_3]
    CHECK(pi_elem(3).pow(2) == CycInt(3, {0, -3}));
    CHECK(CycInt::integer(5, 7).is_integer());
    CHECK(CycInt::integer(5, 7).integer_value() == 7);
    CHECK_FALSE(CycInt::zeta(5).is_integer());
  }

  TEST_CASE("norm of the uniformizer is p") {
    for (int p : {3, 5, 7, 11, 13}) {
      CHECK(pi_elem(p).norm() == p);
      CHECK(CycInt::one(p).norm() == 1);
      CHECK(CycInt::integer(p, 2).norm() == (Int(1) << (p - 1)));
      // conjugation by 1 is the identity
      CHECK(pi_elem(p).conjugate(1) == pi_elem(p));
    }
  }

  TEST_CASE("exact division by rational integers") {
    const CycInt pi2 = pi_elem(3).pow(2);  // -3 zeta
    CHECK(pi2.divisible(3));
    CHECK(pi2.divide(3) == CycInt(3, {0, -1}));
    CHECK_FALSE(pi2.divisible(2));
    CHECK_THROWS_AS(pi2.divide(2), std::invalid_argument);
  }

  TEST_CASE("p factors as a unit times the (p-1)-st power of zeta - 1") {
    for (int p : {3, 5, 7, 11, 13}) {
      const UniformizerReport rep = verify_uniformizer(p);
      CHECK(rep.p == p);
      CHECK(rep.norm_pi == p);
      CHECK((rep.unit_norm == 1 || rep.unit_norm == -1));
      CHECK(rep.p_is_unit_times_pi_power);
      CHECK(rep.one_plus_pi_has_order_p);
      CHECK(rep.pass);
      // reassemble p = u * pi^(p-1) independently
      const CycInt u(p, rep.unit_coeffs);
      CHECK(u * pi_elem(p).pow(p - 1) == CycInt::integer(p, p));
    }
    // at p = 3 the unit is 1 + zeta = -zeta^2
    CHECK(verify_uniformizer(3).unit_coeffs == std::vector<Int>{1, 1});

    CHECK_THROWS_AS(verify_uniformizer(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniformizer(9), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniformizer(17), std::invalid_argument);  // past the bound
    CHECK(verify_uniformizer(17, 17).pass);
  }

  TEST_CASE("character pushforward sends x to zeta - 1") {
    const auto r = Ring::create(RingSpec::make(RingFamily::FpG, 3, 1, 1));
    CHECK(chi_push(r->generator(1)) == pi_elem(3, 3));
    CHECK(chi_push(r->one() + r->monomial({1}, 2)) == CycInt(3, {2, 2}, 3));
    const auto [ca, cb] = chi_push_symbol(r->generator(1), r->monomial({2}, 1));
    CHECK(ca == pi_elem(3, 3));
    CHECK(cb == pi_elem(3, 3).pow(2));

    const auto r2 = Ring::create(RingSpec::make(RingFamily::FpG, 2, 2, 1));
    CHECK_THROWS_AS(chi_push(r2->one()), std::invalid_argument);
    const auto rq = Ring::create(RingSpec::make(RingFamily::ZGModPkGamma, 3, 1, 2));
    CHECK_THROWS_AS(chi_push(rq->one()), std::invalid_argument);
  }

  TEST_CASE("character pushforward is a ring homomorphism") {
    std::mt19937_64 rng(42);
    const std::vector<RingSpec> specs = {
        RingSpec::make(RingFamily::ZpkG, 3, 1, 2),
        RingSpec::make(RingFamily::ZpkG, 5, 1, 2),
        RingSpec::make(RingFamily::FpG, 3, 1, 1),
    };
    for (const RingSpec& spec : specs) {
      const auto r = Ring::create(spec);
      CHECK(chi_push(r->one()) == CycInt::one(spec.p, r->pk()));
      for (int trial = 0; trial < 60; ++trial) {
        const RingElem a = random_elem(rng, r), b = random_elem(rng, r);
        CHECK(chi_push(a * b) == chi_push(a) * chi_push(b));
        CHECK(chi_push(a + b) == chi_push(a) + chi_push(b));
      }
    }
  }

  TEST_CASE("character pushforward commutes with coefficient reduction") {
    std::mt19937_64 rng(43);
    const auto rz = Ring::create(RingSpec::make(RingFamily::ZpkG, 3, 1, 2));
    const auto rf = Ring::create(RingSpec::make(RingFamily::FpG, 3, 1, 1));
    for (int trial = 0; trial < 60; ++trial) {
      const RingElem a = random_elem(rng, rz);
      const CycInt over_z9 = chi_push(a);
      const CycInt reduced(3, over_z9.coeffs(), 3);
      CHECK(reduced == chi_push(rf->from_coeffs(a.coeffs())));
    }
  }
}
