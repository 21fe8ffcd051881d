#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cyclespec/characters.hpp"
#include "cyclespec/symfun.hpp"

using namespace cyclespec;

TEST_CASE("alpha_k reads multiplicities") {
  for (int n : {3, 5, 7}) {
    auto a1 = alpha_k(n, 1);
    CHECK(a1.at(Partition::from_unsorted(std::vector<int>(n, 1))) == Rat(n));
  }
  CHECK(alpha_k(4, 4).at(Partition({4})) == Rat(1));
  CHECK(alpha_k(5, 2).at(Partition({2, 2, 1})) == Rat(2));
  CHECK(alpha_k(5, 2).at(Partition({5})) == Rat(0));
  CHECK_THROWS_AS(alpha_k(3, 4), DomainError);
}

TEST_CASE("character values") {
  for (int n = 1; n <= 7; ++n) {
    Partition id = Partition::from_unsorted(std::vector<int>(n, 1));
    for (const auto& rho : enumerate_partitions(n)) {
      CHECK(mn_character(rho, id) == dimension(rho));
      for (const auto& mu : enumerate_partitions(n)) {
        CHECK(mn_character(Partition({n}), mu) == 1);
      }
    }
  }
  CHECK(mn_character(Partition({3, 1}), Partition({2, 1, 1})) == 1);
  // sign character: parity of n minus number of cycles
  for (const auto& mu : enumerate_partitions(6)) {
    int expected = ((6 - mu.rows()) % 2 == 0) ? 1 : -1;
    CHECK(mn_character(Partition({1, 1, 1, 1, 1, 1}), mu) == expected);
  }
  CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), DomainError);
}

TEST_CASE("character table orthogonality both ways") {
  for (int n = 1; n <= 7; ++n) {
    const auto& t = character_table(n);
    std::size_t p = t.shapes.size();
    // rows weighted by class sizes
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t s = 0; s < p; ++s) {
        Rat sum;
        for (std::size_t m = 0; m < p; ++m) {
          sum += Rat(class_size(t.classes[m])) * Rat(t.chi[r][m]) *
                 Rat(t.chi[s][m]);
        }
        CHECK(sum == (r == s ? Rat(factorial(n)) : Rat(0)));
      }
    }
    // columns weighted by n!/class_size (centralizer order)
    for (std::size_t m = 0; m < p; ++m) {
      for (std::size_t l = 0; l < p; ++l) {
        Rat sum;
        for (std::size_t r = 0; r < p; ++r) {
          sum += Rat(t.chi[r][m]) * Rat(t.chi[r][l]);
        }
        Rat expect =
            (m == l) ? Rat(factorial(n), class_size(t.classes[m])) : Rat(0);
        CHECK(sum == expect);
      }
    }
  }
  CHECK_THROWS_AS(character_table(9), CapabilityError);
}

TEST_CASE("inner products") {
  for (int n = 1; n <= 7; ++n) {
    auto shapes = enumerate_partitions(n);
    for (const auto& rho : shapes) {
      auto chi_rho = irreducible_character(rho);
      for (const auto& sigma : shapes) {
        Rat ip = inner_product(chi_rho, irreducible_character(sigma));
        CHECK(ip == (rho == sigma ? Rat(1) : Rat(0)));
      }
    }
  }
  CHECK(inner_product(alpha_k(4, 4), irreducible_character(Partition({3, 1}))) ==
        Rat(-1, 4));
}

TEST_CASE("Young subgroup averages") {
  for (int n : {3, 4, 5}) {
    auto f = alpha_k(n, 2);
    // T_[1^n] is trivial: average = value at the identity class.
    Partition ones = Partition::from_unsorted(std::vector<int>(n, 1));
    CHECK(psi_inner_product(f, ones) == f.at(ones));
    // T_[n] = S_n: average = plain mean.
    CHECK(psi_inner_product(f, Partition({n})) ==
          inner_product(f, constant_class_function(n, Rat(1))));
  }
  CHECK(psi_inner_product(alpha_k(5, 2), Partition({3, 2})) == Rat(1));
}

TEST_CASE("Young's rule: psi average equals Kostka-weighted projections") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto f = alpha_k(n, k);
      for (const auto& lam : enumerate_partitions(n)) {
        Rat direct = psi_inner_product(f, lam);
        Rat viakostka;
        for (const auto& mu : enumerate_partitions(n)) {
          std::int64_t km = kostka(mu, lam);
          if (km != 0) {
            viakostka +=
                Rat(km) * inner_product(f, irreducible_character(mu));
          }
        }
        CHECK(direct == viakostka);
      }
    }
  }
}

TEST_CASE("decompose examples") {
  auto one = decompose(constant_class_function(5, Rat(1)));
  CHECK(one.size() == 1);
  CHECK(one.at(Partition({5})) == Rat(1));

  auto a4 = decompose(alpha_k(4, 4));
  CHECK(a4.size() == 4);
  CHECK(a4.at(Partition({4})) == Rat(1, 4));
  CHECK(a4.at(Partition({3, 1})) == Rat(-1, 4));
  CHECK(a4.at(Partition({2, 1, 1})) == Rat(1, 4));
  CHECK(a4.at(Partition({1, 1, 1, 1})) == Rat(-1, 4));
  CHECK(a4.count(Partition({2, 2})) == 0);

  auto a2 = decompose(alpha_k(4, 2));
  CHECK(a2.size() == 3);
  CHECK(a2.at(Partition({4})) == Rat(1, 2));
  CHECK(a2.at(Partition({2, 2})) == Rat(1, 2));
  CHECK(a2.at(Partition({2, 1, 1})) == Rat(-1, 2));

  CHECK_THROWS_AS(decompose(alpha_k(9, 2)), CapabilityError);
}

TEST_CASE("decompose reconstructs exactly") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto f = alpha_k(n, k);
      auto g = reconstruct(n, decompose(f));
      CHECK(g.values == f.values);
    }
  }
}

TEST_CASE("closed-form coefficient table") {
  auto c42 = a_rho_closed_form(4, 2);
  CHECK(c42.size() == 3);
  CHECK(c42.at(Partition({4})) == 1);
  CHECK(c42.at(Partition({2, 2})) == 1);
  CHECK(c42.at(Partition({2, 1, 1})) == -1);

  auto c43 = a_rho_closed_form(4, 3);
  CHECK(c43.size() == 3);
  CHECK(c43.at(Partition({4})) == 1);
  CHECK(c43.at(Partition({2, 2})) == -1);
  CHECK(c43.at(Partition({1, 1, 1, 1})) == 1);

  for (int n : {2, 5, 6}) {
    auto cn = a_rho_closed_form(n, n);
    CHECK(cn.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(cn.at(Partition::hook(n - i, i)) == (i % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("closed form equals brute-force decomposition") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto brute = decompose(alpha_k(n, k));
      for (auto& [p, c] : brute) c *= Rat(k);
      auto closed = a_rho_closed_form(n, k);
      CHECK(brute.size() == closed.size());
      for (const auto& [p, c] : closed) {
        REQUIRE(brute.count(p) == 1);
        CHECK(brute.at(p) == Rat(c));
      }
    }
  }
}

TEST_CASE("closed form equals the Pieri-derived expansion") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto closed = a_rho_closed_form(n, k);
      auto pieri = derive_a_rho_via_pieri(n, k);
      CHECK(closed.size() == pieri.coeffs.size());
      for (const auto& [p, c] : closed) {
        REQUIRE(pieri.coeffs.count(p) == 1);
        CHECK(pieri.coeffs.at(p) == Rat(c));
      }
    }
  }
}

TEST_CASE("two-row-hook coefficients fire for exactly two k, opposite signs") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& rho : enumerate_partitions(n)) {
      if (rho.rows() < 2) continue;          // [n] plays a special role
      if (rho.part(2) > 1) continue;         // not of shape [a,b,1^c]
      std::set<int> hits;
      int sign_product = 1;
      for (int k = 1; k <= n; ++k) {
        auto table = a_rho_closed_form(n, k);
        if (auto it = table.find(rho); it != table.end()) {
          hits.insert(k);
          sign_product *= it->second;
        }
      }
      CHECK(hits.size() == 2);
      CHECK(sign_product == -1);
    }
  }
}
