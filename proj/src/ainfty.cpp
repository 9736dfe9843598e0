#include "trop/ainfty.hpp"

#include "trop/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace trop {

namespace {

void for_each_tuple(int dim, int k, const std::function<void(const Tuple&)>& fn)
{
	if (k > 0 && dim == 0) return;
	Tuple t(k, 0);
	while (true) {
		fn(t);
		int p = k - 1;
		while (p >= 0 && ++t[p] == dim) t[p--] = 0;
		if (p < 0) return;
	}
}

std::vector<std::string> names(const FilteredAlgebra& A, const Tuple& t)
{
	std::vector<std::string> out;
	for (int i : t) out.push_back(A.basis[i].name);
	return out;
}

std::string join(const std::vector<std::string>& v)
{
	std::string s = "(";
	for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
	return s + ")";
}

bool empty_map(const std::vector<MultiMap>& maps, int k)
{
	return k < 0 || k >= (int)maps.size() || maps[k].empty();
}

int top(const std::vector<MultiMap>& maps)
{
	for (int k = (int)maps.size() - 1; k >= 0; --k)
		if (!maps[k].empty()) return k;
	return -1;
}

std::vector<Element> units(const FilteredAlgebra& A)
{
	std::vector<Element> e;
	for (int i = 0; i < A.dim(); ++i) e.push_back(A.unit(i, A.scalar(1, 0)));
	return e;
}

void record(RelationReport& rep, const FilteredAlgebra& A, int k, const Tuple& t, const Element& defect)
{
	++rep.tuples;
	auto v = valuation(defect);
	if (!v) return;
	rep.pass = false;
	auto& w = rep.worst[k];
	if (!w || *v < *w) w = *v;
	if (!rep.first) rep.first = Defect{k, names(A, t), defect, *v};
}

// sum over n >= 0 of maps[k + n] applied to every placement of n copies of
// `a` among the k inputs xs, stopping once n val(a) reaches the cutoff.
Element insert_sum(const std::vector<MultiMap>& maps, const Element& zero,
                   const std::vector<const Element*>& xs, const Element& a, const Q& cutoff)
{
	int k = (int)xs.size();
	Element out = zero;
	auto va = valuation(a);
	std::vector<int> parts(k + 1, 0);
	std::vector<const Element*> args;
	std::function<void(int, int)> rec = [&](int slot, int left) {
		if (slot == k) {
			parts[k] = left;
			args.clear();
			for (int s = 0; s <= k; ++s) {
				for (int r = 0; r < parts[s]; ++r) args.push_back(&a);
				if (s < k) args.push_back(xs[s]);
			}
			out = add(out, apply(maps[args.size()], zero, args));
			return;
		}
		for (int j = 0; j <= left; ++j) {
			parts[slot] = j;
			rec(slot + 1, left - j);
		}
	};
	for (int n = 0; k + n < (int)maps.size(); ++n) {
		if (n > 0 && (!va || Q(n) * *va >= cutoff)) break;
		if (maps[k + n].empty()) continue;
		rec(0, n);
	}
	return out;
}

// sum over l and over splittings of the inputs into l consecutive (possibly
// empty) blocks of outer^l(inner(block_1), ..., inner(block_l)), where
// blocks[s][len] is the inner map on inputs s .. s+len-1.
Element composite_sum(const std::vector<MultiMap>& outer, const Element& zero,
                      const std::vector<std::vector<Element>>& blocks, int k)
{
	Element out = zero;
	std::vector<const Element*> args;
	std::function<void(int, int, int)> rec = [&](int l, int pos, int left) {
		if (left == 0) {
			if (pos == k) out = add(out, apply(outer[l], zero, args));
			return;
		}
		int lo = left == 1 ? k - pos : 0;
		for (int len = lo; len <= k - pos; ++len) {
			const Element& b = blocks[pos][len];
			if (is_zero(b)) continue;
			args.push_back(&b);
			rec(l, pos + len, left - 1);
			args.pop_back();
		}
	};
	for (int l = 0; l < (int)outer.size(); ++l) {
		if (outer[l].empty()) continue;
		if (l == 0 && k != 0) continue;
		args.clear();
		rec(l, 0, l);
	}
	return out;
}

std::vector<std::vector<Element>> blocks_of(const AInftyHom& f, const std::vector<Element>& e, const Tuple& t)
{
	int k = (int)t.size();
	std::vector<std::vector<Element>> B(k + 1);
	Element z = f.target.zero();
	for (int s = 0; s <= k; ++s)
		for (int len = 0; s + len <= k; ++len) {
			if (empty_map(f.f, len)) {
				B[s].push_back(z);
				continue;
			}
			std::vector<const Element*> in;
			for (int r = 0; r < len; ++r) in.push_back(&e[t[s + r]]);
			B[s].push_back(apply(f.f[len], z, in));
		}
	return B;
}

void require_positive(const Element& a, const char* what)
{
	auto v = valuation(a);
	if (v && *v <= 0) throw Error("zero_valuation", std::string(what) + " needs an element of positive valuation");
}

void check_element(const FilteredAlgebra& A, const Element& x, const std::string& where)
{
	if ((int)x.size() != A.dim()) throw Error("invalid_algebra", where + ": element has wrong length");
	for (auto& c : x)
		if (c.field != A.field || c.cutoff != A.cutoff)
			throw Error("invalid_algebra", where + ": coefficient field or cutoff differs from the algebra");
}

}  // namespace

// ---- algebra

int FilteredAlgebra::index(const std::string& name) const
{
	for (int i = 0; i < dim(); ++i)
		if (basis[i].name == name) return i;
	return -1;
}

Element FilteredAlgebra::zero() const
{
	return Element(basis.size(), Novikov::zero(field, cutoff));
}

Element FilteredAlgebra::unit(int i, const Novikov& c) const
{
	Element e = zero();
	e[i] = c;
	return e;
}

Novikov FilteredAlgebra::scalar(const Q& coef, const Q& exponent) const
{
	return Novikov::monomial(coef, exponent, field, cutoff);
}

int FilteredAlgebra::top_arity() const
{
	return top(m);
}

bool FilteredAlgebra::operator==(const FilteredAlgebra& o) const
{
	return field == o.field && cutoff == o.cutoff && basis == o.basis && top(m) == top(o.m) &&
	       std::equal(m.begin(), m.begin() + (top(m) + 1), o.m.begin());
}

int AInftyHom::top_arity() const
{
	return top(f);
}

bool operator==(const AInftyHom& f, const AInftyHom& g)
{
	return f.source == g.source && f.target == g.target && top(f.f) == top(g.f) &&
	       std::equal(f.f.begin(), f.f.begin() + (top(f.f) + 1), g.f.begin());
}

FilteredAlgebra zero_algebra(Field field, const Q& cutoff, int kmax)
{
	FilteredAlgebra A;
	A.field = field;
	A.cutoff = cutoff;
	A.kmax = kmax;
	A.m.assign(kmax + 1, {});
	return A;
}

namespace {

void validate_maps(const FilteredAlgebra& src, const FilteredAlgebra& dst, const std::vector<MultiMap>& maps,
                   int kmax, int shift, const char* label)
{
	if ((int)maps.size() != kmax + 1) throw Error("invalid_algebra", std::string(label) + ": wrong number of maps");
	for (int k = 0; k <= kmax; ++k)
		for (auto& [t, out] : maps[k]) {
			std::string where = std::string(label) + std::to_string(k);
			if ((int)t.size() != k) throw Error("invalid_algebra", where + ": tuple length differs from arity");
			int deg = shift - k;
			for (int i : t) {
				if (i < 0 || i >= src.dim()) throw Error("invalid_algebra", where + ": basis index out of range");
				deg += src.basis[i].deg;
			}
			where = std::string(label) + std::to_string(k) + join(names(src, t));
			check_element(dst, out, where);
			for (int j = 0; j < dst.dim(); ++j) {
				if (out[j].is_zero()) continue;
				if (*out[j].valuation() < 0) throw Error("invalid_algebra", where + ": negative valuation");
				if (dst.basis[j].deg != deg)
					throw Error("invalid_algebra", where + ": output " + dst.basis[j].name + " has degree " +
					                                   std::to_string(dst.basis[j].deg) + ", expected " +
					                                   std::to_string(deg));
			}
		}
}

}  // namespace

void validate(const FilteredAlgebra& A)
{
	std::set<std::string> seen;
	for (auto& b : A.basis)
		if (!seen.insert(b.name).second) throw Error("invalid_algebra", "duplicate basis name " + b.name);
	if (A.kmax < 0) throw Error("invalid_algebra", "negative kmax");
	validate_maps(A, A, A.m, A.kmax, 2, "m");
	for (auto& [t, out] : A.m[0]) {
		auto v = valuation(out);
		if (v && *v <= 0) throw Error("invalid_algebra", "curvature m0 must have positive valuation");
	}
}

void validate(const AInftyHom& f)
{
	validate(f.source);
	validate(f.target);
	if (f.source.field != f.target.field || f.source.cutoff != f.target.cutoff)
		throw Error("algebra_mismatch", "source and target use different fields or cutoffs");
	validate_maps(f.source, f.target, f.f, f.kmax, 1, "f");
}

// ---- elements

Element add(const Element& a, const Element& b)
{
	Element out = a;
	for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
	return out;
}

Element scale(const Novikov& c, const Element& a)
{
	Element out = a;
	for (auto& x : out) x = c * x;
	return out;
}

bool is_zero(const Element& a)
{
	return std::all_of(a.begin(), a.end(), [](const Novikov& c) { return c.is_zero(); });
}

std::optional<Q> valuation(const Element& a)
{
	std::optional<Q> v;
	for (auto& c : a) {
		auto w = c.valuation();
		if (w && (!v || *w < *v)) v = w;
	}
	return v;
}

std::string to_string(const FilteredAlgebra& A, const Element& a)
{
	std::string s;
	for (int i = 0; i < A.dim(); ++i) {
		if (a[i].is_zero()) continue;
		if (!s.empty()) s += " + ";
		s += "(" + to_string(a[i]) + ")*" + A.basis[i].name;
	}
	return s.empty() ? "0" : s;
}

Element apply(const MultiMap& M, const Element& zero, const std::vector<const Element*>& in)
{
	Element out = zero;
	for (auto& [t, val] : M) {
		if (t.size() != in.size()) continue;
		Novikov coef;
		bool have = false, vanish = false;
		for (size_t j = 0; j < t.size(); ++j) {
			const Novikov& c = (*in[j])[t[j]];
			if (c.is_zero()) {
				vanish = true;
				break;
			}
			coef = have ? coef * c : c;
			have = true;
		}
		if (vanish) continue;
		out = add(out, have ? scale(coef, val) : val);
	}
	return out;
}

Element apply(const FilteredAlgebra& A, int k, const std::vector<const Element*>& in)
{
	if (k < 0 || k > A.kmax) return A.zero();
	return apply(A.m[k], A.zero(), in);
}

// ---- relations

RelationReport check_relations(const FilteredAlgebra& A)
{
	RelationReport rep;
	rep.worst.assign(A.kmax + 1, std::nullopt);
	auto e = units(A);
	Element z = A.zero();
	for (int k = 0; k <= A.kmax; ++k)
		for_each_tuple(A.dim(), k, [&](const Tuple& t) {
			Element R = z;
			for (int j1 = 0; j1 <= k; ++j1)
				for (int i = 0; j1 + i <= k; ++i) {
					int j2 = k - j1 - i, outer = j1 + j2 + 1;
					if (empty_map(A.m, outer) || empty_map(A.m, i)) continue;
					std::vector<const Element*> in;
					for (int r = 0; r < i; ++r) in.push_back(&e[t[j1 + r]]);
					Element inner = apply(A.m[i], z, in);
					if (is_zero(inner)) continue;
					std::vector<const Element*> args;
					for (int r = 0; r < j1; ++r) args.push_back(&e[t[r]]);
					args.push_back(&inner);
					for (int r = j1 + i; r < k; ++r) args.push_back(&e[t[r]]);
					Element term = apply(A.m[outer], z, args);
					if (A.field == Field::Q) {
						// |a_{k-j1}| + ... + |a_k| - i, inputs numbered from 1
						long club = -i;
						for (int l = std::max(1, k - j1); l <= k; ++l) club += A.basis[t[l - 1]].deg;
						if (club % 2 != 0) term = scale(A.scalar(-1, 0), term);
					}
					R = add(R, term);
				}
			record(rep, A, k, t, R);
		});
	return rep;
}

namespace {

// stop_first skips the remaining tuples once a defect is found
RelationReport hom_report(const AInftyHom& f, bool stop_first)
{
	const auto& A = f.source;
	const auto& B = f.target;
	if (A.field != Field::F2)
		throw Error("unsupported_field", "homomorphism relations are only checked over F2");
	RelationReport rep;
	rep.worst.assign(f.kmax + 1, std::nullopt);
	auto e = units(A);
	Element zb = B.zero();
	for (int k = 0; k <= f.kmax; ++k)
		for_each_tuple(A.dim(), k, [&](const Tuple& t) {
			if (stop_first && !rep.pass) return;
			Element L = zb;
			for (int j1 = 0; j1 <= k; ++j1)
				for (int j = 0; j1 + j <= k; ++j) {
					int j2 = k - j1 - j, outer = j1 + 1 + j2;
					if (empty_map(f.f, outer) || empty_map(A.m, j)) continue;
					std::vector<const Element*> in;
					for (int r = 0; r < j; ++r) in.push_back(&e[t[j1 + r]]);
					Element inner = apply(A.m[j], A.zero(), in);
					if (is_zero(inner)) continue;
					std::vector<const Element*> args;
					for (int r = 0; r < j1; ++r) args.push_back(&e[t[r]]);
					args.push_back(&inner);
					for (int r = j1 + j; r < k; ++r) args.push_back(&e[t[r]]);
					L = add(L, apply(f.f[outer], zb, args));
				}
			Element R = composite_sum(B.m, zb, blocks_of(f, e, t), k);
			Element D = add(L, R);  // F2: difference is the sum
			// the defect lives in B but is reported against A's tuple
			++rep.tuples;
			auto v = valuation(D);
			if (!v) return;
			rep.pass = false;
			auto& w = rep.worst[k];
			if (!w || *v < *w) w = *v;
			if (!rep.first) rep.first = Defect{k, names(A, t), D, *v};
		});
	return rep;
}

}  // namespace

RelationReport check_hom(const AInftyHom& f)
{
	return hom_report(f, false);
}

// ---- deformation

FilteredAlgebra deform(const FilteredAlgebra& A, const Element& a)
{
	check_element(A, a, "deform");
	require_positive(a, "deform");
	FilteredAlgebra out = A;
	if (is_zero(a)) return out;
	auto e = units(A);
	Element z = A.zero();
	for (int k = 0; k <= A.kmax; ++k) {
		out.m[k].clear();
		for_each_tuple(A.dim(), k, [&](const Tuple& t) {
			std::vector<const Element*> xs;
			for (int i : t) xs.push_back(&e[i]);
			Element v = insert_sum(A.m, z, xs, a, A.cutoff);
			if (!is_zero(v)) out.m[k][t] = v;
		});
	}
	return out;
}

Element mc_residual(const FilteredAlgebra& A, const Element& a)
{
	check_element(A, a, "mc_residual");
	Element out = A.zero();
	for (int k = 0; k <= A.kmax; ++k) {
		if (A.m[k].empty()) continue;
		std::vector<const Element*> in(k, &a);
		out = add(out, apply(A.m[k], A.zero(), in));
	}
	return out;
}

bool is_mc(const FilteredAlgebra& A, const Element& a)
{
	return is_zero(mc_residual(A, a));
}

// ---- homomorphisms

AInftyHom identity_hom(const FilteredAlgebra& A)
{
	AInftyHom f;
	f.source = f.target = A;
	f.kmax = A.kmax;
	f.f.assign(A.kmax + 1, {});
	if (A.kmax >= 1)
		for (int i = 0; i < A.dim(); ++i) f.f[1][{i}] = A.unit(i, A.scalar(1, 0));
	return f;
}

AInftyHom zero_source_hom(const FilteredAlgebra& B, const Element& b)
{
	check_element(B, b, "zero_source_hom");
	AInftyHom f;
	f.source = zero_algebra(B.field, B.cutoff, B.kmax);
	f.target = B;
	f.kmax = B.kmax;
	f.f.assign(B.kmax + 1, {});
	if (!is_zero(b)) f.f[0][{}] = b;
	return f;
}

AInftyHom compose_homs(const AInftyHom& g, const AInftyHom& f)
{
	if (!(f.target == g.source))
		throw Error("algebra_mismatch", "target of the first homomorphism is not the source of the second");
	AInftyHom h;
	h.source = f.source;
	h.target = g.target;
	h.kmax = std::min(f.kmax, g.kmax);
	h.f.assign(h.kmax + 1, {});
	auto e = units(f.source);
	Element z = g.target.zero();
	for (int k = 0; k <= h.kmax; ++k)
		for_each_tuple(f.source.dim(), k, [&](const Tuple& t) {
			Element v = composite_sum(g.f, z, blocks_of(f, e, t), k);
			if (!is_zero(v)) h.f[k][t] = v;
		});
	return h;
}

Element pushforward(const AInftyHom& f, const Element& b)
{
	check_element(f.source, b, "pushforward");
	Element out = f.target.zero();
	for (int k = 0; k <= f.kmax; ++k) {
		if (f.f[k].empty()) continue;
		std::vector<const Element*> in(k, &b);
		out = add(out, apply(f.f[k], f.target.zero(), in));
	}
	return out;
}

AInftyHom deform_hom(const AInftyHom& f, const Element& a)
{
	check_element(f.source, a, "deform_hom");
	require_positive(a, "deform_hom");
	AInftyHom g = f;
	g.source = deform(f.source, a);
	if (is_zero(a)) return g;
	auto e = units(f.source);
	Element z = f.target.zero();
	for (int k = 0; k <= f.kmax; ++k) {
		g.f[k].clear();
		for_each_tuple(f.source.dim(), k, [&](const Tuple& t) {
			std::vector<const Element*> xs;
			for (int i : t) xs.push_back(&e[i]);
			Element v = insert_sum(f.f, z, xs, a, f.source.cutoff);
			if (!is_zero(v)) g.f[k][t] = v;
		});
	}
	return g;
}

// ---- ideals

FilteredAlgebra quotient_ideal(const FilteredAlgebra& A, const std::vector<std::string>& ideal)
{
	std::vector<char> in_I(A.dim(), 0);
	for (auto& name : ideal) {
		int i = A.index(name);
		if (i < 0) throw Error("invalid_algebra", "ideal names unknown basis element " + name);
		in_I[i] = 1;
	}
	for (int k = 1; k <= A.kmax; ++k)
		for (auto& [t, out] : A.m[k]) {
			if (std::none_of(t.begin(), t.end(), [&](int i) { return in_I[i]; })) continue;
			for (int j = 0; j < A.dim(); ++j)
				if (!in_I[j] && !out[j].is_zero())
					throw Error("not_an_ideal", "m" + std::to_string(k) + join(names(A, t)) + " has component " +
					                                A.basis[j].name + " outside the ideal");
		}
	std::vector<int> keep, pos(A.dim(), -1);
	for (int i = 0; i < A.dim(); ++i)
		if (!in_I[i]) {
			pos[i] = (int)keep.size();
			keep.push_back(i);
		}
	FilteredAlgebra Q_ = zero_algebra(A.field, A.cutoff, A.kmax);
	for (int i : keep) Q_.basis.push_back(A.basis[i]);
	for (int k = 0; k <= A.kmax; ++k)
		for (auto& [t, out] : A.m[k]) {
			if (std::any_of(t.begin(), t.end(), [&](int i) { return in_I[i]; })) continue;
			Tuple nt;
			for (int i : t) nt.push_back(pos[i]);
			Element v = Q_.zero();
			for (int i : keep) v[pos[i]] = out[i];
			if (!is_zero(v)) Q_.m[k][nt] = v;
		}
	return Q_;
}

FilteredAlgebra reduce_zero_energy(const FilteredAlgebra& A)
{
	FilteredAlgebra out = A;
	for (auto& M : out.m) {
		MultiMap next;
		for (auto& [t, v] : M) {
			Element w = A.zero();
			for (int j = 0; j < A.dim(); ++j) w[j] = A.scalar(v[j].constant(), 0);
			if (!is_zero(w)) next[t] = w;
		}
		M = next;
	}
	return out;
}

// ---- fixtures

FilteredAlgebra dga_builder(const DGATables& T, Field field, const Q& cutoff, int kmax)
{
	if (kmax < 2) throw Error("invalid_parameter", "a DGA needs kmax >= 2");
	FilteredAlgebra A = zero_algebra(field, cutoff, kmax);
	A.basis = T.basis;
	int n = A.dim();
	auto fail = [&](const std::string& what, std::vector<int> t) -> Error {
		return Error("dga_axioms", what + " fails on " + join(names(A, t)));
	};
	auto fixed = [&](Element v) {
		if ((int)v.size() != n) throw Error("dga_axioms", "table entry has wrong length");
		for (auto& c : v) {
			if (c.field != field || c.cutoff != cutoff)
				throw Error("dga_axioms", "table coefficient uses another field or cutoff");
			if (!c.in_ring()) throw Error("dga_axioms", "table coefficient has negative valuation");
		}
		return v;
	};
	std::vector<Element> d(n, A.zero());
	std::vector<std::vector<Element>> p(n, std::vector<Element>(n, A.zero()));
	for (auto& [i, v] : T.d) {
		if (i < 0 || i >= n) throw Error("dga_axioms", "differential of unknown basis index");
		d[i] = fixed(v);
		for (int j = 0; j < n; ++j)
			if (!d[i][j].is_zero() && A.basis[j].deg != A.basis[i].deg + 1) throw fail("degree of d", {i});
	}
	for (auto& [ij, v] : T.product) {
		auto [i, j] = ij;
		if (i < 0 || i >= n || j < 0 || j >= n) throw Error("dga_axioms", "product of unknown basis index");
		p[i][j] = fixed(v);
		for (int l = 0; l < n; ++l)
			if (!p[i][j][l].is_zero() && A.basis[l].deg != A.basis[i].deg + A.basis[j].deg)
				throw fail("degree of product", {i, j});
	}
	// linear extensions
	auto D = [&](const Element& x) {
		Element out = A.zero();
		for (int i = 0; i < n; ++i)
			if (!x[i].is_zero()) out = add(out, scale(x[i], d[i]));
		return out;
	};
	auto P = [&](const Element& x, const Element& y) {
		Element out = A.zero();
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (!x[i].is_zero() && !y[j].is_zero()) out = add(out, scale(x[i] * y[j], p[i][j]));
		return out;
	};
	auto e = units(A);
	Novikov minus = A.scalar(-1, 0);
	for (int i = 0; i < n; ++i)
		if (!is_zero(D(d[i]))) throw fail("d^2 = 0", {i});
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			Element lhs = D(p[i][j]);
			Element sec = P(e[i], d[j]);
			if (A.basis[i].deg % 2 != 0) sec = scale(minus, sec);
			Element rhs = add(P(d[i], e[j]), sec);
			if (!is_zero(add(lhs, scale(minus, rhs)))) throw fail("Leibniz rule", {i, j});
			for (int l = 0; l < n; ++l)
				if (!is_zero(add(P(p[i][j], e[l]), scale(minus, P(e[i], p[j][l]))))) throw fail("associativity", {i, j, l});
		}
	for (int i = 0; i < n; ++i)
		if (!is_zero(d[i])) A.m[1][{i}] = d[i];
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (!is_zero(p[i][j])) A.m[2][{i, j}] = p[i][j];
	return A;
}

std::vector<Element> mc_bruteforce(const FilteredAlgebra& A, const std::vector<int>& support,
                                   const std::vector<Q>& exponents)
{
	if (A.field != Field::F2) throw Error("unsupported_field", "mc_bruteforce enumerates F2 coefficients only");
	for (int i : support)
		if (i < 0 || i >= A.dim()) throw Error("invalid_parameter", "support index out of range");
	size_t per = size_t(1) << exponents.size();
	std::vector<Novikov> coefs;
	for (size_t mask = 0; mask < per; ++mask) {
		Novikov c = Novikov::zero(A.field, A.cutoff);
		for (size_t b = 0; b < exponents.size(); ++b)
			if (mask >> b & 1) c += A.scalar(1, exponents[b]);
		coefs.push_back(c);
	}
	std::vector<Element> out;
	std::vector<size_t> pick(support.size(), 0);
	while (true) {
		Element a = A.zero();
		for (size_t s = 0; s < support.size(); ++s) a[support[s]] += coefs[pick[s]];
		if (is_mc(A, a)) out.push_back(a);
		size_t s = 0;
		while (s < pick.size() && ++pick[s] == per) pick[s++] = 0;
		if (s == pick.size()) break;
	}
	return out;
}

namespace {

Novikov random_coef(std::mt19937& rng, const FilteredAlgebra& A, bool positive)
{
	static const Q grid[] = {Q(0), Q(1, 2), Q(1), Q(2)};
	std::bernoulli_distribution coin(0.5);
	while (true) {
		Novikov c = Novikov::zero(A.field, A.cutoff);
		for (auto& l : grid)
			if ((!positive || l > 0) && coin(rng)) c += A.scalar(1, l);
		if (!c.is_zero()) return c;
	}
}

}  // namespace

FilteredAlgebra random_dga(std::mt19937& rng, const Q& cutoff)
{
	static const int degs[] = {0, 1, 1, 2};
	FilteredAlgebra shape = zero_algebra(Field::F2, cutoff);
	std::bernoulli_distribution pd(0.4), pp(0.35);
	for (int attempt = 0; attempt < 100000; ++attempt) {
		DGATables T;
		int n = 2 + (int)(rng() % 2);
		bool has1 = false;
		for (int i = 0; i < n; ++i) {
			int d = degs[rng() % 4];
			has1 |= d == 1;
			T.basis.push_back({"e" + std::to_string(i), d});
		}
		if (!has1) T.basis[rng() % n].deg = 1;
		shape.basis = T.basis;
		bool any = false;
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (T.basis[j].deg == T.basis[i].deg + 1 && pd(rng)) {
					if (!T.d.count(i)) T.d[i] = shape.zero();
					T.d[i][j] += random_coef(rng, shape, false);
					any = true;
				}
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				for (int l = 0; l < n; ++l)
					if (T.basis[l].deg == T.basis[i].deg + T.basis[j].deg && pp(rng)) {
						auto& v = T.product[{i, j}];
						if (v.empty()) v = shape.zero();
						v[l] += random_coef(rng, shape, false);
						any = true;
					}
		if (!any) continue;
		try {
			auto A = dga_builder(T, Field::F2, cutoff);
			if (A.top_arity() >= 1) return A;
		} catch (const Error& e) {
			if (e.code != "dga_axioms") throw;
		}
	}
	throw Error("nonconvergent", "random_dga found no DGA");
}

Element random_deg1(std::mt19937& rng, const FilteredAlgebra& A)
{
	Element a = A.zero();
	std::bernoulli_distribution coin(0.7);
	for (int i = 0; i < A.dim(); ++i)
		if (A.basis[i].deg == 1 && coin(rng)) a[i] = random_coef(rng, A, true);
	return a;
}

std::vector<AInftyHom> random_homs(std::mt19937& rng, const FilteredAlgebra& A, const FilteredAlgebra& B, int want,
                                   int attempts)
{
	std::vector<AInftyHom> found;
	std::vector<int> deg1;
	for (int i = 0; i < B.dim(); ++i)
		if (B.basis[i].deg == 1) deg1.push_back(i);
	std::vector<Element> mc;
	for (auto& b : mc_bruteforce(B, deg1, {Q(1, 2), Q(1)}))
		if (!is_zero(b)) mc.push_back(b);
	std::bernoulli_distribution coin(0.5), rare(0.25);
	auto random_output = [&](int deg, bool positive) {
		Element v = B.zero();
		for (int j = 0; j < B.dim(); ++j)
			if (B.basis[j].deg == deg && coin(rng)) v[j] = random_coef(rng, B, positive);
		return v;
	};
	for (int att = 0; att < attempts && (int)found.size() < want; ++att) {
		AInftyHom f;
		f.source = A;
		f.target = B;
		f.kmax = std::min(A.kmax, B.kmax);
		f.f.assign(f.kmax + 1, {});
		if (!mc.empty() && coin(rng)) f.f[0][{}] = mc[rng() % mc.size()];
		for (int i = 0; i < A.dim(); ++i) {
			Element v = random_output(A.basis[i].deg, false);
			if (!is_zero(v)) f.f[1][{i}] = v;
		}
		if (f.kmax >= 2 && rare(rng) && A.dim() > 0) {
			int i = rng() % A.dim(), j = rng() % A.dim();
			Element v = random_output(A.basis[i].deg + A.basis[j].deg - 1, true);
			if (!is_zero(v)) f.f[2][{i, j}] = v;
		}
		if (f.top_arity() < 0) continue;
		if (std::any_of(found.begin(), found.end(), [&](const AInftyHom& g) { return g == f; })) continue;
		if (hom_report(f, true).pass) found.push_back(f);
	}
	return found;
}

}  // namespace trop
