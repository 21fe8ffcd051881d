#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclespec/symfun.hpp"

using namespace cyclespec;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SchurExpansion unit_schur(const Partition& p) {
  SchurExpansion e;
  e.n = p.n();
  e.coeffs.emplace(p, Rat(1));
  return e;
}

}  // namespace

TEST_CASE("kostka examples") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : enumerate_partitions(n)) CHECK(kostka(mu, mu) == 1);
  }
  CHECK(kostka(Partition({3, 1}), Partition({2, 1, 1})) == 2);
  CHECK(kostka(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
  CHECK(kostka(Partition({2, 2}), Partition({2, 2})) == 1);
  CHECK(kostka(Partition({2, 2}), Partition({4})) == 0);
  CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), DomainError);
}

TEST_CASE("kostka triangularity and hook closed form") {
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        std::int64_t k = kostka(all[a], all[b]);
        if (a > b) CHECK(k == 0);  // mu after lambda in enumeration order
        if (a == b) CHECK(k == 1);
        CHECK(k >= 0);
      }
    }
    for (const auto& lam : all) {
      int r = lam.rows();
      for (int i = 0; i < n; ++i) {
        CHECK(kostka(Partition::hook(n - i, i), lam) == binom(r - 1, i));
      }
    }
  }
}

TEST_CASE("schur_to_monomial of S_[n] is the all-ones expansion") {
  for (int n : {1, 3, 6}) {
    auto m = schur_to_monomial(unit_schur(Partition({n})));
    auto all = enumerate_partitions(n);
    CHECK(m.coeffs.size() == all.size());
    for (const auto& lam : all) {
      REQUIRE(m.coeffs.count(lam) == 1);
      CHECK(m.coeffs.at(lam) == Rat(1));
    }
  }
}

TEST_CASE("monomial_to_schur of M_[n] alternates over hooks") {
  for (int n : {2, 4, 6}) {
    MonomialExpansion e;
    e.n = n;
    e.coeffs.emplace(Partition({n}), Rat(1));
    auto s = monomial_to_schur(e);
    CHECK(s.coeffs.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      REQUIRE(s.coeffs.count(Partition::hook(n - i, i)) == 1);
      CHECK(s.coeffs.at(Partition::hook(n - i, i)) ==
            Rat(i % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("basis conversion round trips") {
  MonomialExpansion e;
  e.n = 6;
  e.coeffs.emplace(Partition({6}), Rat(-2));
  e.coeffs.emplace(Partition({3, 2, 1}), Rat(5, 3));
  e.coeffs.emplace(Partition({2, 2, 1, 1}), Rat(7, 11));
  e.coeffs.emplace(Partition({1, 1, 1, 1, 1, 1}), Rat(1, 2));

  auto round = schur_to_monomial(monomial_to_schur(e));
  CHECK(round.n == 6);
  CHECK(round.coeffs == e.coeffs);

  SchurExpansion s;
  s.n = 5;
  s.coeffs.emplace(Partition({4, 1}), Rat(3, 7));
  s.coeffs.emplace(Partition({2, 2, 1}), Rat(-1));
  auto round2 = monomial_to_schur(schur_to_monomial(s));
  CHECK(round2.coeffs == s.coeffs);
}

TEST_CASE("pieri examples") {
  auto p1 = pieri_multiply(Partition({1}), 1);
  CHECK(p1.coeffs.size() == 2);
  CHECK(p1.coeffs.at(Partition({2})) == Rat(1));
  CHECK(p1.coeffs.at(Partition({1, 1})) == Rat(1));

  auto p2 = pieri_multiply(Partition({2}), 2);
  CHECK(p2.coeffs.size() == 3);
  CHECK(p2.coeffs.count(Partition({4})) == 1);
  CHECK(p2.coeffs.count(Partition({3, 1})) == 1);
  CHECK(p2.coeffs.count(Partition({2, 2})) == 1);
  CHECK(p2.coeffs.count(Partition({2, 1, 1})) == 0);  // same-column pair

  auto p3 = pieri_multiply(Partition({2, 1}), 1);
  CHECK(p3.coeffs.size() == 3);
  CHECK(p3.coeffs.count(Partition({3, 1})) == 1);
  CHECK(p3.coeffs.count(Partition({2, 2})) == 1);
  CHECK(p3.coeffs.count(Partition({2, 1, 1})) == 1);

  CHECK_THROWS_AS(pieri_multiply(Partition({1}), 0), DomainError);
}

TEST_CASE("pieri agrees with monomial-basis multiplication") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; n + m <= 8; ++m) {
      for (const auto& lam : enumerate_partitions(n)) {
        auto direct = pieri_multiply(lam, m);
        auto via_monomials = monomial_to_schur(
            monomial_multiply_by_h(schur_to_monomial(unit_schur(lam)), m));
        CHECK(direct.coeffs == via_monomials.coeffs);
      }
    }
  }
}

TEST_CASE("ch_alpha_k examples") {
  for (int n : {3, 5}) {
    auto e = ch_alpha_k(n, n);
    CHECK(e.coeffs.size() == 1);
    CHECK(e.coeffs.at(Partition({n})) == Rat(1, n));
  }

  auto e42 = ch_alpha_k(4, 2);
  CHECK(e42.coeffs.at(Partition({2, 2})) == Rat(1));
  CHECK(e42.coeffs.at(Partition({3, 1})) == Rat(1, 2));
  CHECK(e42.coeffs.at(Partition({4})) == Rat(1, 2));
  CHECK(e42.coeffs.at(Partition({2, 1, 1})) == Rat(1, 2));
  CHECK(e42.coeffs.count(Partition({1, 1, 1, 1})) == 0);

  auto e1 = ch_alpha_k(5, 1);
  for (const auto& lam : enumerate_partitions(5)) {
    CHECK(e1.coeffs.at(lam) == Rat(lam.rows()));
  }

  CHECK_THROWS_AS(ch_alpha_k(4, 5), DomainError);
  CHECK_THROWS_AS(ch_alpha_k(4, 0), DomainError);
}

TEST_CASE("pieri derivation examples") {
  for (int n : {2, 4, 5}) {
    auto e = derive_a_rho_via_pieri(n, n);
    CHECK(e.coeffs.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(e.coeffs.at(Partition::hook(n - i, i)) ==
            Rat(i % 2 == 0 ? 1 : -1));
    }
  }

  auto e43 = derive_a_rho_via_pieri(4, 3);
  CHECK(e43.coeffs.size() == 3);
  CHECK(e43.coeffs.at(Partition({4})) == Rat(1));
  CHECK(e43.coeffs.at(Partition({2, 2})) == Rat(-1));
  CHECK(e43.coeffs.at(Partition({1, 1, 1, 1})) == Rat(1));

  auto e42 = derive_a_rho_via_pieri(4, 2);
  CHECK(e42.coeffs.size() == 3);
  CHECK(e42.coeffs.at(Partition({4})) == Rat(1));
  CHECK(e42.coeffs.at(Partition({2, 2})) == Rat(1));
  CHECK(e42.coeffs.at(Partition({2, 1, 1})) == Rat(-1));
}

TEST_CASE("derivation routes agree: k * ch(alpha_k) == pieri route") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto via_beta = monomial_to_schur(ch_alpha_k(n, k));
      for (auto& [p, c] : via_beta.coeffs) c *= Rat(k);
      auto via_pieri = derive_a_rho_via_pieri(n, k);
      CHECK(via_beta.coeffs == via_pieri.coeffs);
    }
  }
}
