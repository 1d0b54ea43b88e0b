#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "toric/fixtures.hpp"
#include "toric/grobner.hpp"

using namespace toric;
namespace fx = toric::fixtures;

namespace {

using Pair = std::pair<int, int>;

Monomial M(std::initializer_list<int> xs) {
  Monomial a(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) a(i++) = x;
  return a;
}

std::vector<std::pair<Pair, Pair>> lead_trail(const std::vector<Binomial>& basis) {
  std::vector<std::pair<Pair, Pair>> out;
  for (const auto& b : basis) out.emplace_back(b.lead, b.trail);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::EmptyInput;
}

Monomial random_monomial(std::mt19937_64& rng, int p, int degree) {
  Monomial a = Monomial::Zero(p);
  for (int k = 0; k < degree; ++k) a(uniform_int(rng, 0, p - 1)) += 1;
  return a;
}

bool same_monomial(const Monomial& a, const Monomial& b) { return a.size() == b.size() && a == b; }

}  // namespace

TEST_CASE("face orders of the examples") {
  {
    const auto fo = face_order(fx::e3(), LeafOrder{{Face{1, 2}, Face{2, 3}}});
    CHECK(fo.total == std::vector<Face>{Face(), Face{1}, Face{2}, Face{1, 2}, Face{3}, Face{2, 3}});
    CHECK(fo.block == std::vector<int>{0, 0, 0, 0, 1, 1});
    CHECK(fo.blocks.size() == 2);
    CHECK(fo.index_of(Face{3}) == 4);
    CHECK(fo.index_of(Face{1, 3}) == -1);
  }
  CHECK(face_order(fx::e1()).total == std::vector<Face>{Face(), Face{1}, Face{2}, Face{1, 2}});
  CHECK(face_order(validate(std::vector<std::vector<int>>{{1}}, 1)).total == std::vector<Face>{Face(), Face{1}});
}

TEST_CASE("face orders need a leaf order") {
  CHECK(code_of([] { face_order(fx::e2()); }) == ErrorCode::NotQuasiForest);
  CHECK(code_of([] { face_order(fx::e3(), LeafOrder{{Face{1, 2}}}); }) == ErrorCode::NotQuasiForest);
}

TEST_CASE("face order extends blocks then cardinality") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto c = testing::random_quasi_forest(seed);
    CAPTURE(seed);
    const auto fo = face_order(c);
    CHECK(fo.total.front() == Face());
    auto all = faces(c);
    auto listed = fo.total;
    std::sort(all.begin(), all.end(), lex_less);
    std::sort(listed.begin(), listed.end(), lex_less);
    CHECK(all == listed);
    for (int r = 0; r + 1 < fo.size(); ++r) {
      const bool earlier_block = fo.block[r] < fo.block[r + 1];
      const bool same_block_smaller = fo.block[r] == fo.block[r + 1] && fo.total[r].size() <= fo.total[r + 1].size();
      CHECK((earlier_block || same_block_smaller));
    }
  }
}

TEST_CASE("bases of the examples") {
  {
    const auto fo = face_order(fx::e3());
    const auto basis = generate_basis(fo);
    CHECK(lead_trail(basis) == std::vector<std::pair<Pair, Pair>>{{{1, 2}, {0, 3}}, {{2, 4}, {0, 5}}, {{3, 4}, {1, 5}}});
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].from_f);
    CHECK_FALSE(basis[0].from_g);
    CHECK(basis[1].from_f);
    CHECK(basis[1].from_g);
    CHECK_FALSE(basis[2].from_f);
    CHECK(basis[2].from_g);
    CHECK(basis[2].kind() == BinomialKind::G);
  }
  CHECK(lead_trail(generate_basis(face_order(fx::e1()))) == std::vector<std::pair<Pair, Pair>>{{{1, 2}, {0, 3}}});
  CHECK(generate_basis(face_order(validate(std::vector<std::vector<int>>{{1}}, 1))).empty());
}

TEST_CASE("degrevlex") {
  // E3 has six variables
  CHECK(degrevlex_compare(monomial(6, {1, 2}), monomial(6, {0, 3})) == std::strong_ordering::greater);
  CHECK(degrevlex_compare(monomial(6, {3, 4}), monomial(6, {1, 5})) == std::strong_ordering::greater);
  CHECK(degrevlex_compare(monomial(6, {2, 4}), monomial(6, {0, 5})) == std::strong_ordering::greater);
  CHECK(degrevlex_compare(M({1, 0, 0}), M({0, 1, 0})) == std::strong_ordering::greater);
  CHECK(degrevlex_compare(M({0, 0, 1}), M({2, 0, 0})) == std::strong_ordering::less);
  CHECK(degrevlex_compare(M({1, 1, 0}), M({1, 1, 0})) == std::strong_ordering::equal);

  const auto fo = face_order(fx::e3());
  const auto basis = generate_basis(fo);
  CHECK(same_monomial(degrevlex_leading(basis[0], fo), monomial(6, {1, 2})));
  CHECK(same_monomial(degrevlex_leading(basis[2], fo), monomial(6, {3, 4})));
  CHECK(same_monomial(degrevlex_leading(basis[1], fo), monomial(6, {2, 4})));
  Binomial swapped = basis[0];
  std::swap(swapped.lead, swapped.trail);
  CHECK(code_of([&] { degrevlex_leading(swapped, fo); }) == ErrorCode::LeadingTermMismatch);
}

TEST_CASE("kernel condition") {
  const auto fo = face_order(fx::e3());
  auto basis = generate_basis(fo);
  CHECK_NOTHROW(check_in_kernel(basis, fo));
  CHECK(image(monomial(6, {1, 2}), fo) == image(monomial(6, {0, 3}), fo));
  basis[0].trail = {0, 1};
  CHECK(code_of([&] { check_in_kernel(basis, fo); }) == ErrorCode::NotInKernel);
  CHECK(code_of([&] { buchberger_verify(basis, fo); }) == ErrorCode::NotInKernel);
}

TEST_CASE("Buchberger verification of the examples") {
  {
    const auto fo = face_order(fx::e3());
    const auto basis = generate_basis(fo);
    const auto r = buchberger_verify(basis, fo);
    CHECK(r.ok);
    CHECK(r.pairs_reduced + r.pairs_skipped == 3);
    const auto all = buchberger_verify(basis, fo, true);
    CHECK(all.ok);
    CHECK(all.pairs_reduced == 3);
    CHECK(all.pairs_skipped == 0);
  }
  {
    const auto fo = face_order(fx::e1());
    const auto r = buchberger_verify(generate_basis(fo), fo);
    CHECK(r.ok);
    CHECK(r.pairs_reduced == 0);
  }
}

TEST_CASE("dropping a binomial from the E3 basis is detected") {
  const auto fo = face_order(fx::e3());
  const auto full = generate_basis(fo);
  const auto oracle = kernel_oracle(fo, 4);
  for (std::size_t drop = 0; drop < full.size(); ++drop) {
    CAPTURE(drop);
    auto mutant = full;
    mutant.erase(mutant.begin() + static_cast<std::ptrdiff_t>(drop));
    const bool gb = buchberger_verify(mutant, fo, true).ok;
    const auto inj = standard_monomial_injectivity(oracle, mutant);
    CHECK_FALSE((gb && inj.injective));
    if (!inj.injective) {
      REQUIRE(inj.collision.has_value());
      CHECK(image(inj.collision->first, fo) == image(inj.collision->second, fo));
      CHECK(is_standard(inj.collision->first, mutant));
      CHECK(is_standard(inj.collision->second, mutant));
    }
  }
  // the remaining two leads are coprime, so only the kernel route sees this one
  auto mutant = full;
  mutant.erase(mutant.begin() + 1);
  CHECK(buchberger_verify(mutant, fo, true).ok);
  CHECK_FALSE(standard_monomial_injectivity(oracle, mutant).injective);
}

TEST_CASE("normal forms in E3") {
  const auto basis = generate_basis(face_order(fx::e3()));
  CHECK(same_monomial(normal_form(monomial(6, {1, 2}), basis), monomial(6, {0, 3})));
  CHECK(same_monomial(normal_form(monomial(6, {3, 4}), basis), monomial(6, {1, 5})));
  CHECK(same_monomial(normal_form(monomial(6, {0, 0}), basis), monomial(6, {0, 0})));
  CHECK(is_standard(monomial(6, {0, 0}), basis));
  CHECK_FALSE(is_standard(monomial(6, {2, 4}), basis));
  CHECK(initial_squarefree_quadratic(basis));
}

TEST_CASE("radicality of (t) on the examples") {
  auto run = [](const SimplicialComplex& c, int bound = kDefaultRadicalBound) {
    const auto cone = build_cone(c);
    const auto primes = classify_primes(cone, minimal_vertex_covers(skeleton(c)));
    return t_is_radical(c, cone, primes, is_normal(cone).normal, bound);
  };
  const auto e2 = run(fx::e2());
  CHECK(e2.radical == false);
  CHECK(e2.semantic == false);
  CHECK_FALSE(e2.structural.has_value());
  REQUIRE(e2.witness.has_value());
  CHECK(*e2.witness == (LatticePoint(4) << 1, 1, 1, 2).finished());

  const auto e3 = run(fx::e3());
  CHECK(e3.radical == true);
  CHECK(e3.structural == true);
  CHECK(e3.semantic == true);
  CHECK(e3.bound == 6);

  const auto e1 = run(fx::e1());
  CHECK(e1.radical == true);
  CHECK(e1.semantic == true);

  const auto t2 = run(fx::t2(), 3);
  CHECK_FALSE(t2.radical.has_value());
  CHECK_FALSE(t2.semantic.has_value());
}

TEST_CASE("kernel oracle on the examples") {
  {
    const auto fo = face_order(fx::e3());
    const auto oracle = kernel_oracle(fo, 2);
    CHECK(oracle.monomials == 6 + 21);
    const auto pairs = kernel_pairs(oracle, 2);
    REQUIRE(pairs.size() == 3);
    std::vector<std::pair<Pair, Pair>> expected{{{1, 2}, {0, 3}}, {{2, 4}, {0, 5}}, {{3, 4}, {1, 5}}};
    for (const auto& [lead, trail] : expected) {
      const auto u = monomial(6, lead);
      const auto v = monomial(6, trail);
      CHECK(std::count_if(pairs.begin(), pairs.end(), [&](const auto& p) {
              return same_monomial(p.first, u) && same_monomial(p.second, v);
            }) == 1);
    }
  }
  {
    const auto fo = face_order(fx::e1());
    const auto pairs = kernel_pairs(kernel_oracle(fo, 2), 2);
    REQUIRE(pairs.size() == 1);
    CHECK(same_monomial(pairs[0].first, monomial(4, {1, 2})));
    CHECK(same_monomial(pairs[0].second, monomial(4, {0, 3})));
  }
  {
    const auto fo = face_order(fx::e1());
    const auto basis = generate_basis(fo);
    const auto pairs = kernel_pairs(kernel_oracle(fo, 3), 3);
    CHECK_FALSE(pairs.empty());
    for (const auto& [u, v] : pairs) CHECK(same_monomial(normal_form(u, basis), normal_form(v, basis)));
  }
}

TEST_CASE("kernel oracle respects its cap") {
  const auto fo = face_order(fx::d1());
  CHECK(code_of([&] { kernel_oracle(fo, 4, 1000); }) == ErrorCode::SizeCapExceeded);
}

TEST_CASE("bases of random quasi-forests") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto c = testing::random_quasi_forest(seed);
    CAPTURE(seed);
    const auto fo = face_order(c);
    const auto basis = generate_basis(fo);
    CHECK_NOTHROW(check_in_kernel(basis, fo));
    for (const auto& b : basis) {
      CHECK(b.lead != b.trail);
      CHECK_NOTHROW(degrevlex_leading(b, fo));
    }
    CHECK(initial_squarefree_quadratic(basis));
    CHECK(buchberger_verify(basis, fo, seed % 4 == 0).ok);

    const auto oracle = kernel_oracle(fo, seed % 2 ? 4 : 3);
    CHECK(standard_monomial_injectivity(oracle, basis).injective);

    // every degree-2 kernel pair reduces to a common normal form
    for (const auto& [u, v] : kernel_pairs(oracle, 2)) CHECK(same_monomial(normal_form(u, basis), normal_form(v, basis)));

    // rewriting is confluent
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_monomial(rng, fo.size(), uniform_int(rng, 1, 5));
      const auto fixed = normal_form(a, basis);
      const auto shuffled = normal_form(a, basis, [&](const std::vector<std::size_t>& cand) {
        return cand[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(cand.size()) - 1))];
      });
      CHECK(same_monomial(fixed, shuffled));
      CHECK(is_standard(fixed, basis));
      CHECK(image(fixed, fo) == image(a, fo));
    }
  }
}

TEST_CASE("radicality routes agree on quasi-forests") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto c = testing::random_quasi_forest(seed);
    CAPTURE(seed);
    const auto cone = build_cone(c);
    const auto primes = classify_primes(cone, minimal_vertex_covers(skeleton(c)));
    const auto r = t_is_radical(c, cone, primes, true, 4);
    CHECK(r.structural == true);
    CHECK(r.semantic == true);
    CHECK(r.radical == true);
  }
}
