#include <catch2/catch_amalgamated.hpp>

#include <hk/groebner.hpp>

#include "test_util.hpp"

#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

using namespace hk;
using namespace testutil;

namespace {

// Brute-force colength: count monomials not divisible by any leading
// monomial, walking the (divisor-closed) standard set breadth-first.  Stops
// at `cap` and reports nothing, so callers can treat a blown cap as
// "infinite or too big" exactly like the engine treats its own budget.
std::optional<std::uint64_t> bf_colength(const GroebnerBasis& G,
                                         std::uint64_t cap = 5000) {
  if (G.is_unit_ideal()) return 0;
  std::vector<std::vector<std::uint64_t>> lts;
  for (const auto& m : G.staircase()) lts.push_back(m.exponents());
  std::size_t nv = G.ambient().nvars;
  auto divisible = [&](const std::vector<std::uint64_t>& e) {
    for (const auto& l : lts) {
      bool dom = true;
      for (std::size_t i = 0; i < nv; ++i)
        if (e[i] < l[i]) {
          dom = false;
          break;
        }
      if (dom) return true;
    }
    return false;
  };
  std::set<std::vector<std::uint64_t>> seen;
  std::queue<std::vector<std::uint64_t>> work;
  std::vector<std::uint64_t> one(nv, 0);
  if (divisible(one)) return 0; // unit leading term
  seen.insert(one);
  work.push(one);
  std::uint64_t count = 0;
  while (!work.empty()) {
    auto e = work.front();
    work.pop();
    if (++count > cap) return std::nullopt;
    for (std::size_t i = 0; i < nv; ++i) {
      auto f = e;
      ++f[i];
      if (!divisible(f) && seen.insert(f).second) work.push(f);
    }
  }
  return count;
}

// A reduced basis: no term of gens[i] is divisible by the leading monomial
// of any other element.
bool is_reduced(const GroebnerBasis& G) {
  const auto& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (const auto& t : gs[i].terms())
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (i == j) continue;
        if (gs[j].leading_monomial().divides(t.mono)) return false;
      }
  return true;
}

std::vector<Poly> vars_of(const Ambient& amb) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < amb.nvars; ++i)
    v.push_back(Poly::variable(amb, i));
  return v;
}

} // namespace

TEST_CASE("buchberger output is a reduced monic basis certified by s-pairs") {
  std::mt19937 rng(314159);
  for (int c = 0; c < 50; ++c) {
    std::uint32_t p = (c % 2) ? 5 : 7;
    Ambient amb = amb_of(p, 3);
    std::vector<Poly> gens;
    unsigned ng = 2 + c % 2;
    for (unsigned i = 0; i < ng; ++i)
      gens.push_back(random_poly(rng, amb, 3, 4, /*allow_zero=*/false));
    GroebnerBasis G = buchberger(amb, gens);
    // every input generator is in the ideal of G
    for (const auto& f : gens) CHECK(contains(G, f));
    for (const auto& g : G.generators()) CHECK(g.leading_coeff() == 1);
    CHECK(is_reduced(G));
    // Buchberger criterion: all s-polynomials reduce to zero
    const auto& gs = G.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        CHECK(normal_form(spoly(gs[i], gs[j]), G).is_zero());
  }
}

TEST_CASE("textbook basis: (x^2 + y^2, x y) over F_7") {
  Ambient amb = amb_of(7, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);
  GroebnerBasis G = buchberger(amb, {x * x + y * y, x * y});
  REQUIRE(G.size() == 3); // x^2 + y^2, x y, y^3
  CHECK(contains(G, y * y * y));
  CHECK(colength(G) == 4); // 1, x, y, y^2
  CHECK(bf_colength(G) == 4);
}

TEST_CASE("colength agrees with brute force and is order independent") {
  std::mt19937 rng(271828);
  for (int c = 0; c < 30; ++c) {
    std::uint32_t p = (c % 2) ? 5 : 2;
    std::uint32_t nv = 2 + c % 2;
    std::uniform_int_distribution<std::uint64_t> da(1, 4);
    std::optional<std::uint64_t> counts[3];
    int oi = 0;
    for (OrderKind k :
         {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}) {
      Ambient amb = amb_of(p, nv, k);
      std::mt19937 local(1000 + c); // same generators under every order
      std::vector<Poly> gens;
      for (std::uint32_t i = 0; i < nv; ++i) {
        std::uniform_int_distribution<std::uint64_t> dd(1, 4);
        gens.push_back(Poly::variable(amb, i, dd(local)));
      }
      gens.push_back(random_poly(local, amb, 3, 3));
      GroebnerBasis G = buchberger(amb, gens);
      counts[oi] = colength(G);
      REQUIRE(counts[oi].has_value()); // pure powers force finiteness
      if (k == OrderKind::degrevlex) CHECK(bf_colength(G) == counts[oi]);
      ++oi;
    }
    CHECK(counts[0] == counts[1]);
    CHECK(counts[0] == counts[2]);
  }
}

TEST_CASE("colength is empty exactly for non-artinian quotients") {
  Ambient amb = amb_of(5, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);
  CHECK_FALSE(colength(buchberger(amb, {x})).has_value());
  CHECK_FALSE(colength(buchberger(amb, {x * y})).has_value());
  CHECK(colength(buchberger(amb, {x, y})) == 1);
  CHECK(colength(buchberger(amb, {Poly::constant(amb, 3)})) == 0);
}

TEST_CASE("ideal intersection through elimination") {
  Ambient amb = amb_of(5, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);
  GroebnerBasis I = buchberger(amb, {x});
  GroebnerBasis J = buchberger(amb, {y});
  GroebnerBasis M = intersect_ideals(I, J);
  CHECK(contains(M, x * y));
  CHECK_FALSE(contains(M, x));
  CHECK_FALSE(contains(M, y));
  REQUIRE(M.size() == 1);
  CHECK(M.generators()[0] == x * y);
}

TEST_CASE("ideal quotients by an element and by an ideal") {
  Ambient amb = amb_of(5, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);
  GroebnerBasis I = buchberger(amb, {x * x, y * y});

  GroebnerBasis Q = ideal_quotient(I, x * y); // (x^2, y^2) : xy = (x, y)
  CHECK(contains(Q, x));
  CHECK(contains(Q, y));
  CHECK_FALSE(Q.is_unit_ideal());
  CHECK(colength(Q) == 1);

  // socle: (x^2, y^2) : (x, y) = (x^2, y^2, x y)
  GroebnerBasis S = ideal_colon_ideal(I, {x, y});
  CHECK(contains(S, x * y));
  CHECK_FALSE(contains(S, x));
  CHECK(colength(S) == 3); // 1, x, y
  // one-step check of the defining property: g * x and g * y land in I
  for (const auto& g : S.generators()) {
    CHECK(contains(I, g * x));
    CHECK(contains(I, g * y));
  }
}

TEST_CASE("krull dimension of leading-term ideals") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    Ambient amb = amb_of(5, n);
    CHECK(krull_dimension(buchberger(amb, {})) == n);
    CHECK(krull_dimension(buchberger(amb, vars_of(amb))) == 0);
  }
  Ambient amb3 = amb_of(5, 3);
  Poly x = Poly::variable(amb3, 0), y = Poly::variable(amb3, 1),
       z = Poly::variable(amb3, 2);
  CHECK(krull_dimension(buchberger(amb3, {x * y})) == 2);
  CHECK(krull_dimension(buchberger(amb3, {x * y, x * z})) == 2);
  CHECK(krull_dimension(buchberger(amb3, {x * y, x * z, y * z})) == 1);
  CHECK(krull_dimension(buchberger(amb3, {x, y * z})) == 1);
}

TEST_CASE("gorenstein detection on artinian quotients") {
  Ambient amb = amb_of(5, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);
  CHECK(is_gorenstein_artinian(buchberger(amb, {x * x, y * y})));
  CHECK(is_gorenstein_artinian(buchberger(amb, {x * x * x, y * y})));
  CHECK(is_gorenstein_artinian(buchberger(amb, {x, y}))); // the residue field
  // fat point with a two-dimensional socle
  CHECK_FALSE(is_gorenstein_artinian(buchberger(amb, {x * x, x * y, y * y})));
}

TEST_CASE("normal form is linear and idempotent") {
  std::mt19937 rng(17);
  Ambient amb = amb_of(7, 3);
  std::vector<Poly> gens = {random_poly(rng, amb, 2, 3, false),
                            random_poly(rng, amb, 2, 3, false)};
  GroebnerBasis G = buchberger(amb, gens);
  for (int i = 0; i < 40; ++i) {
    Poly f = random_poly(rng, amb, 4, 6), g = random_poly(rng, amb, 4, 6);
    Poly nf = normal_form(f, G), ng = normal_form(g, G);
    CHECK(normal_form(f + g, G) == nf + ng);
    CHECK(normal_form(nf, G) == nf);
    // no term of a normal form is reducible
    for (const auto& t : nf.terms())
      for (const auto& h : G.generators())
        CHECK_FALSE(h.leading_monomial().divides(t.mono));
  }
}

TEST_CASE("resource limits interrupt both directions") {
  Ambient amb = amb_of(5, 2);
  Poly x = Poly::variable(amb, 0), y = Poly::variable(amb, 1);

  Limits tight;
  tight.max_colength = 100;
  GroebnerBasis big =
      buchberger(amb, {Poly::variable(amb, 0, 200), Poly::variable(amb, 1, 200)});
  try {
    colength(big, tight);
    FAIL("colength cap not enforced");
  } catch (const ResourceError& e) {
    CHECK(e.kind == ResourceError::Kind::colength);
  }

  Limits expired;
  expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    buchberger(amb, {x * x + y, x * y * y + x, y * y * y + y * x}, expired);
    FAIL("deadline not enforced");
  } catch (const ResourceError& e) {
    CHECK(e.kind == ResourceError::Kind::time);
  }
}
