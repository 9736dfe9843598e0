#include "trop/novikov.hpp"

#include "trop/error.hpp"

#include <algorithm>
#include <cctype>

namespace trop {

namespace {

void check_same(const Novikov& a, const Novikov& b)
{
	if (a.cutoff != b.cutoff)
		throw Error("cutoff_mismatch", "cutoffs " + to_string(a.cutoff) + " and " + to_string(b.cutoff) + " differ");
	if (a.field != b.field) throw Error("field_mismatch", "coefficient fields differ");
}

// Reduces a coefficient into the base field; F2 needs an integer.
Q reduce(const Q& c, Field f)
{
	if (f == Field::Q) return c;
	if (c.get_den() != 1) throw Error("parse_error", "F2 coefficient " + to_string(c) + " is not an integer");
	mpz_class r = c.get_num() % 2;
	return Q(r != 0 ? 1 : 0);
}

}  // namespace

Novikov Novikov::zero(Field f, const Q& cutoff)
{
	Novikov z;
	z.field = f;
	z.cutoff = cutoff;
	z.cutoff.canonicalize();
	return z;
}

Novikov Novikov::monomial(const Q& coef, const Q& exponent, Field f, const Q& cutoff)
{
	Novikov z = zero(f, cutoff);
	Q c = reduce(coef, f), e = exponent;
	e.canonicalize();
	if (c != 0 && e < cutoff) z.terms.emplace_back(e, c);
	return z;
}

std::optional<Q> Novikov::valuation() const
{
	if (terms.empty()) return std::nullopt;
	return terms.front().first;
}

bool Novikov::in_ring() const
{
	return terms.empty() || terms.front().first >= 0;
}

Q Novikov::constant() const
{
	for (auto& [e, c] : terms)
		if (e == 0) return c;
	return 0;
}

Novikov operator+(const Novikov& a, const Novikov& b)
{
	check_same(a, b);
	Novikov out = Novikov::zero(a.field, a.cutoff);
	out.terms.reserve(a.terms.size() + b.terms.size());
	size_t i = 0, j = 0;
	while (i < a.terms.size() || j < b.terms.size()) {
		if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
			out.terms.push_back(a.terms[i++]);
		} else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
			out.terms.push_back(b.terms[j++]);
		} else {
			Q c = a.terms[i].second + b.terms[j].second;
			if (a.field == Field::F2) c = c == 1 ? 1 : 0;
			if (c != 0) out.terms.emplace_back(a.terms[i].first, c);
			++i;
			++j;
		}
	}
	return out;
}

Novikov& operator+=(Novikov& a, const Novikov& b)
{
	if (b.terms.empty() && a.cutoff == b.cutoff && a.field == b.field) return a;
	a = a + b;
	return a;
}

Novikov operator-(const Novikov& a)
{
	if (a.field == Field::F2) return a;
	Novikov out = a;
	for (auto& t : out.terms) t.second = -t.second;
	return out;
}

Novikov operator-(const Novikov& a, const Novikov& b)
{
	return a + (-b);
}

Novikov operator*(const Novikov& a, const Novikov& b)
{
	check_same(a, b);
	Novikov out = Novikov::zero(a.field, a.cutoff);
	if (a.terms.empty() || b.terms.empty()) return out;
	std::vector<std::pair<Q, Q>> raw;
	for (auto& [ea, ca] : a.terms)
		for (auto& [eb, cb] : b.terms) {
			Q e = ea + eb;
			if (e >= a.cutoff) break;  // exponents of b increase
			raw.emplace_back(e, ca * cb);
		}
	std::sort(raw.begin(), raw.end(), [](auto& x, auto& y) { return x.first < y.first; });
	for (size_t i = 0; i < raw.size();) {
		Q c = 0;
		size_t j = i;
		for (; j < raw.size() && raw[j].first == raw[i].first; ++j) c += raw[j].second;
		c = reduce(c, a.field);
		if (c != 0) out.terms.emplace_back(raw[i].first, c);
		i = j;
	}
	return out;
}

bool operator==(const Novikov& a, const Novikov& b)
{
	return a.field == b.field && a.cutoff == b.cutoff && a.terms == b.terms;
}

Novikov shift(const Novikov& a, const Q& l)
{
	// mpq arithmetic expects canonical operands
	Q d = l;
	d.canonicalize();
	Novikov out = Novikov::zero(a.field, a.cutoff);
	for (auto& [e, c] : a.terms)
		if (e + d < a.cutoff) out.terms.emplace_back(e + d, c);
	return out;
}

Novikov truncate(const Novikov& a, const Q& cutoff)
{
	Novikov out = Novikov::zero(a.field, cutoff);
	for (auto& t : a.terms)
		if (t.first < out.cutoff) out.terms.push_back(t);
	return out;
}

std::string to_string(const Novikov& a)
{
	if (a.terms.empty()) return "0";
	std::string s;
	for (auto& [e, c] : a.terms) {
		if (!s.empty()) s += " + ";
		s += to_string(c) + "*T^{" + to_string(e) + "}";
	}
	return s;
}

Novikov parse_novikov(const std::string& text, Field f, const Q& cutoff)
{
	std::string t;
	for (char ch : text)
		if (!std::isspace((unsigned char)ch)) t += ch;
	auto fail = [&](const std::string& why) -> Error {
		return Error("parse_error", "bad Novikov series '" + text + "': " + why);
	};
	if (t.empty()) throw fail("empty");
	Novikov out = Novikov::zero(f, cutoff);
	// split at top-level signs (not inside braces, not right after '^')
	std::vector<std::string> parts;
	std::string cur;
	int depth = 0;
	for (size_t i = 0; i < t.size(); ++i) {
		char ch = t[i];
		if (ch == '{') ++depth;
		if (ch == '}') --depth;
		bool split = (ch == '+' || ch == '-') && depth == 0 && i > 0 && t[i - 1] != '^' && t[i - 1] != '+' &&
		             t[i - 1] != '-';
		if (split) {
			parts.push_back(cur);
			cur.clear();
		}
		cur += ch;
	}
	parts.push_back(cur);
	for (std::string p : parts) {
		Q sign = 1;
		while (!p.empty() && (p[0] == '+' || p[0] == '-')) {
			if (p[0] == '-') sign = -sign;
			p.erase(0, 1);
		}
		if (p.empty()) throw fail("dangling sign");
		Q coef = 1, expo = 0;
		auto tpos = p.find('T');
		std::string cpart = tpos == std::string::npos ? p : p.substr(0, tpos);
		if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
		if (tpos != std::string::npos && tpos > 0 && p[tpos - 1] != '*') throw fail("expected '*' before T");
		try {
			if (!cpart.empty()) coef = parse_rational(cpart);
			else if (tpos == std::string::npos) throw fail("missing coefficient");
			if (tpos != std::string::npos) {
				std::string rest = p.substr(tpos + 1);
				if (rest.empty()) expo = 1;
				else {
					if (rest[0] != '^') throw fail("expected '^' after T");
					rest.erase(0, 1);
					if (!rest.empty() && rest.front() == '{') {
						if (rest.back() != '}') throw fail("unbalanced brace");
						rest = rest.substr(1, rest.size() - 2);
					}
					if (rest.empty()) throw fail("missing exponent");
					expo = parse_rational(rest);
				}
			}
		} catch (const std::invalid_argument& e) {
			throw fail(e.what());
		}
		out += Novikov::monomial(sign * coef, expo, f, cutoff);
	}
	return out;
}

}  // namespace trop
