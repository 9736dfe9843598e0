#include "doctest.h"
#include "oracles.hpp"
#include "trop/error.hpp"
#include "trop/kernel.hpp"

using namespace trop;

TEST_CASE("evaluate returns the exact argmin set")
{
	TropicalPolynomial mono(2, {{{2, -1}, Q(3, 2)}});
	auto e = evaluate(mono, {Q(1), Q(5)});
	CHECK(e.value == Q(3, 2) + 2 - 5);
	CHECK(e.active == std::vector<Exp>{{2, -1}});

	auto sq = evaluate(fixtures::square(), {0, 0});
	CHECK(sq.value == 0);
	CHECK(sq.active.size() == 4);

	auto t = evaluate(fixtures::t2_c(1), {2, 2});
	CHECK(t.value == -3);
	CHECK(t.active == std::vector<Exp>{{-1, -1}});

	CHECK_THROWS_AS(evaluate(mono, {Q(1)}), Error);
}

TEST_CASE("evaluate: lower bound and midpoint concavity on random data")
{
	std::mt19937 rng(11);
	for (int it = 0; it < 50; ++it) {
		auto phi = oracle::random_poly(rng, 2, 6);
		QVec x = oracle::random_point(rng, 2), y = oracle::random_point(rng, 2);
		auto ex = evaluate(phi, x);
		for (auto& [v, a] : phi.monomials) {
			Q val = a + dot(v, x);
			CHECK(ex.value <= val);
			bool act = std::find(ex.active.begin(), ex.active.end(), v) != ex.active.end();
			CHECK(act == (val == ex.value));
		}
		QVec mid = scale(add(x, y), Q(1, 2));
		CHECK(evaluate(phi, mid).value * 2 >= ex.value + evaluate(phi, y).value);
	}
}

TEST_CASE("tropical variety of the projective line arrangement")
{
	auto V = tropical_variety(fixtures::t2_zero());
	REQUIRE(V.cells.size() == 4);
	CHECK(V.cells[0].dim == 0);
	CHECK(V.cells[0].vertices[0] == QVec{0, 0});
	std::set<Exp> dirs;
	for (auto& c : V.cells)
		if (c.dim == 1) {
			REQUIRE(c.rays.size() == 1);
			CHECK(c.rays[0].base == QVec{0, 0});
			dirs.insert(c.rays[0].direction);
		}
	// x1 = x2 = t <= -2t forces t <= 0, and symmetrically for the other pairs
	CHECK(dirs == std::set<Exp>{{-1, -1}, {-1, 2}, {2, -1}});
	for (auto& c : V.cells) {
		if (c.dim != 1) continue;
		for (int t = 1; t <= 5; ++t) {
			QVec x = add(c.rays[0].base, scale(to_qvec(c.rays[0].direction), Q(t) / 3));
			CHECK(evaluate(fixtures::t2_zero(), x).active == c.active);
		}
	}
}

TEST_CASE("tropical variety of the smooth cubic-like curve")
{
	auto phi = fixtures::t2_c(1);
	auto V = tropical_variety(phi);
	auto verts = V.vertices();
	std::set<QVec> got(verts.begin(), verts.end());
	CHECK(got == std::set<QVec>{{0, 0}, {1, 0}, {0, 1}});
	CHECK(got == oracle::vertices_2d(phi));
	int bounded = 0, rays = 0;
	for (auto& c : V.cells) {
		if (c.dim != 1) continue;
		if (c.bounded()) ++bounded;
		else ++rays;
	}
	CHECK(bounded == 3);
	CHECK(rays == 3);
}

TEST_CASE("tropical variety: single monomial and lineality")
{
	CHECK(tropical_variety(TropicalPolynomial(2, {{{1, 1}, 0}})).cells.empty());
	// 0 (+) x1 in two variables: the wall x1 = 0 is a line
	auto V = tropical_variety(TropicalPolynomial(2, {{{0, 0}, 0}, {{1, 0}, 0}}));
	REQUIRE(V.cells.size() == 1);
	CHECK(V.cells[0].dim == 1);
	REQUIRE(V.cells[0].lines.size() == 1);
	CHECK(std::abs(V.cells[0].lines[0][1]) == 1);
}

TEST_CASE("tropical variety agrees with the brute-force vertex oracle and sampled active sets")
{
	std::mt19937 rng(3);
	for (int it = 0; it < 25; ++it) {
		auto phi = oracle::random_poly(rng, 2, 7);
		auto V = tropical_variety(phi);
		auto verts = V.vertices();
		CHECK(std::set<QVec>(verts.begin(), verts.end()) == oracle::vertices_2d(phi));
		for (auto& c : V.cells) CHECK(c.dim <= 1);
		// every sampled tie point lies in the cell labelled by its active set
		for (int s = 0; s < 40; ++s) {
			QVec x = oracle::random_point(rng, 2, 3, 2);
			auto e = evaluate(phi, x);
			if (e.active.size() < 2) continue;
			bool found = false;
			for (auto& c : V.cells)
				if (c.active == e.active && c.h.contains(x)) found = true;
			CHECK(found);
		}
	}
}

TEST_CASE("newton polytope and lattice points")
{
	auto N0 = newton_polytope(fixtures::t2_zero());
	CHECK(N0.active_lattice.size() == 3);
	CHECK(N0.polytope.vertices.size() == 3);
	auto lp = lattice_points(N0.polytope);
	CHECK(lp.all.size() == 4);
	CHECK(lp.interior == std::vector<Exp>{{0, 0}});

	auto N1 = newton_polytope(fixtures::t2_c(1));
	CHECK(N1.active_lattice.size() == 4);
	CHECK(N1.polytope.vertices.size() == 3);

	auto sq = lattice_points(lattice_polytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
	CHECK(sq.all.size() == 4);
	CHECK(sq.interior.empty());

	auto pt = lattice_points(lattice_polytope(2, {{3, -1}}));
	CHECK(pt.all == std::vector<Exp>{{3, -1}});
	CHECK(pt.interior.empty());

	CHECK(newton_polytope(TropicalPolynomial(1, {{{4}, 1}})).polytope.vertices == std::vector<Exp>{{4}});
}

TEST_CASE("lattice point counts match Pick's theorem on random triangles")
{
	std::mt19937 rng(5);
	std::uniform_int_distribution<int> c(-4, 4);
	for (int it = 0; it < 30; ++it) {
		Exp a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
		long cr = (b[0] - a[0]) * (d[1] - a[1]) - (b[1] - a[1]) * (d[0] - a[0]);
		if (cr == 0) continue;
		if (cr < 0) std::swap(b, d);
		auto [inner, boundary] = oracle::pick_counts({a, b, d});
		auto lp = lattice_points(lattice_polytope(2, {a, b, d}));
		CHECK((long)lp.interior.size() == inner);
		CHECK((long)(lp.all.size() - lp.interior.size()) == boundary);
	}
}

TEST_CASE("newton polytope active lattice is contained in its lattice points")
{
	std::mt19937 rng(8);
	for (int it = 0; it < 20; ++it) {
		auto phi = oracle::random_poly(rng, 2, 8);
		auto N = newton_polytope(phi);
		auto lp = lattice_points(N.polytope);
		for (auto& v : N.active_lattice) CHECK(std::find(lp.all.begin(), lp.all.end(), v) != lp.all.end());
	}
}

namespace {

// concavity along random lines by exact midpoint tests
bool sampled_concave(const Fan& fan, const std::vector<std::vector<int>>& cones, std::mt19937& rng)
{
	for (int it = 0; it < 400; ++it) {
		QVec x = oracle::random_point(rng, fan.n, 3, 5), y = oracle::random_point(rng, fan.n, 3, 5);
		auto fx = fan_function(fan, cones, x), fy = fan_function(fan, cones, y);
		auto fm = fan_function(fan, cones, scale(add(x, y), Q(1, 2)));
		if (!fx || !fy || !fm) continue;
		if (*fm * 2 < *fx + *fy) return false;
	}
	return true;
}

}  // namespace

TEST_CASE("support functions")
{
	Fan p2{2, {{1, 0}, {0, 1}, {-1, -1}}, {0, 0, 0}, {}};
	auto s = support_function(p2);
	CHECK(s.is_concave);
	CHECK(s.poly.monomials == fixtures::t2_zero().monomials);
	CHECK(s.cones.size() == 3);

	Fan one{2, {{2, 3}}, {5}, {}};
	CHECK(support_function(one).is_concave);

	Fan bad{2, {{2, 0}, {0, 1}}, {0, 0}, {}};
	CHECK_THROWS_WITH_AS(support_function(bad), doctest::Contains("not primitive"), Error);

	// n = 1: the line through two opposite rays
	CHECK(support_function(Fan{1, {{1}, {-1}}, {0, 0}, {}}).is_concave);
	CHECK(support_function(Fan{1, {{1}, {-1}}, {0, -1}, {}}).is_concave);
	CHECK_FALSE(support_function(Fan{1, {{1}, {-1}}, {0, 1}, {}}).is_concave);

	// compare with the sampled oracle on random projective-plane and
	// Hirzebruch-type fans
	std::mt19937 rng(2);
	std::uniform_int_distribution<int> val(-3, 3);
	std::vector<std::vector<Exp>> fans = {{{1, 0}, {0, 1}, {-1, -1}}, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
	                                      {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}};
	for (int it = 0; it < 60; ++it) {
		auto& rays = fans[it % fans.size()];
		Fan f{2, rays, {}, {}};
		for (size_t i = 0; i < rays.size(); ++i) f.values.push_back(val(rng));
		auto sf = support_function(f);
		CHECK(sf.is_concave == sampled_concave(f, sf.cones, rng));
	}
}
