#include "ncg/random.hpp"

#include <Eigen/QR>

#include <cmath>
#include <stdexcept>

namespace ncg {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ull;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

Freq random_freq(Rng &rng, int d, int max_freq)
{
	Freq k{};
	for (int mu = 0; mu < d; ++mu)
		k[mu] = rng.integer(-max_freq, max_freq);
	return k;
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ull)))
{
}

std::uint64_t Rng::next_u64()
{
	return splitmix64(key_ + 0x632be59bd9b4e019ull * counter_++);
}

double Rng::uniform()
{
	return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::integer(int lo, int hi)
{
	if (hi < lo)
		throw std::invalid_argument("Rng::integer: empty range");
	auto span = static_cast<std::uint64_t>(hi - lo) + 1;
	return lo + static_cast<int>(next_u64() % span);
}

std::uint64_t stream_id(std::string_view label)
{
	// FNV-1a
	std::uint64_t h = 0xcbf29ce484222325ull;
	for (unsigned char c : label)
		h = (h ^ c) * 0x100000001b3ull;
	return h;
}

TrigPoly random_trigpoly(Rng &rng, RandomShape const &s)
{
	std::vector<TrigPoly::Term> terms;
	for (int t = 0; t < s.terms; ++t)
	{
		auto k = random_freq(rng, s.d, s.max_freq);
		terms.emplace_back(k, s.scale * rng.complex_unit_box());
	}
	return TrigPoly::from_terms(s.d, std::move(terms));
}

TrigPoly random_real_trigpoly(Rng &rng, RandomShape const &s)
{
	auto f = random_trigpoly(rng, s);
	return (f + f.conj()) * 0.5;
}

AlgElement random_element(Rng &rng, RandomShape const &s)
{
	AlgElement a(s.n, s.d);
	for (int i = 0; i < s.n; ++i)
		for (int j = 0; j < s.n; ++j)
			a(i, j) = random_trigpoly(rng, s);
	return a;
}

AlgElement random_traceless(Rng &rng, RandomShape const &s)
{
	return random_element(rng, s).theta_project();
}

AlgElement random_traceless_antihermitian(Rng &rng, RandomShape const &s)
{
	std::vector<TrigPoly> h;
	for (int a = 0; a < s.n * s.n - 1; ++a)
		h.push_back(random_real_trigpoly(rng, s) * cplx(0, 1));
	return combine(h, s.n);
}

std::vector<TrigPoly> random_field(Rng &rng, RandomShape const &s)
{
	std::vector<TrigPoly> f;
	for (int mu = 0; mu < s.d; ++mu)
		f.push_back(random_trigpoly(rng, s));
	return f;
}

Derivation random_derivation(Rng &rng, RandomShape const &s)
{
	auto field = random_field(rng, s);
	return {std::move(field), random_traceless(rng, s)};
}

Derivation random_real_derivation(Rng &rng, RandomShape const &s)
{
	std::vector<TrigPoly> field;
	for (int mu = 0; mu < s.d; ++mu)
		field.push_back(random_real_trigpoly(rng, s));
	return {std::move(field), random_traceless_antihermitian(rng, s)};
}

NCForm random_form(Rng &rng, RandomShape const &s, int degree, int count)
{
	NCForm w(s.n, s.d, degree);
	int m = w.covector_count();
	if (degree > m)
		return w;
	for (int t = 0; t < count; ++t)
	{
		CovectorMask mask = 0;
		while (degree_of(mask) < degree)
			mask |= CovectorMask{1} << rng.integer(0, m - 1);
		w.add(mask, random_element(rng, s));
	}
	return w;
}

NCForm random_one_form(Rng &rng, RandomShape const &s)
{
	NCForm w(s.n, s.d, 1);
	for (int c = 0; c < w.covector_count(); ++c)
		w.add(CovectorMask{1} << c, random_element(rng, s));
	return w;
}

NCForm random_central_one_form(Rng &rng, RandomShape const &s)
{
	NCForm w(s.n, s.d, 1);
	for (int c = 0; c < w.covector_count(); ++c)
		w.add(CovectorMask{1} << c, AlgElement::central(s.n, random_trigpoly(rng, s)));
	return w;
}

std::vector<AlgElement> random_potential(Rng &rng, RandomShape const &s)
{
	std::vector<AlgElement> A;
	for (int mu = 0; mu < s.d; ++mu)
		A.push_back(random_traceless_antihermitian(rng, s));
	return A;
}

ConnectionForm random_su_connection(Rng &rng, RandomShape const &s)
{
	return alpha_from_A(random_potential(rng, s));
}

Matrix random_constant_unitary(Rng &rng, int n, bool special)
{
	Matrix m(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			m(i, j) = rng.complex_unit_box();
	Matrix q = Eigen::HouseholderQR<Matrix>(m).householderQ();
	if (special)
		q *= std::exp(cplx(0, -std::arg(q.determinant()) / n));
	return q;
}

AlgElement random_unitary(Rng &rng, RandomShape const &s, bool special)
{
	int n = s.n, d = s.d;
	auto v = random_constant_unitary(rng, n, special);
	auto w = random_constant_unitary(rng, n, special);
	AlgElement diag(n, d);
	Freq total{};
	for (int j = 0; j < n; ++j)
	{
		Freq k = random_freq(rng, d, s.max_freq);
		if (special && j == n - 1)
			k = negate(total);
		for (int mu = 0; mu < d; ++mu)
			total[mu] += k[mu];
		diag(j, j) = TrigPoly::mode(d, k);
	}
	return v * diag * w;
}

} // namespace ncg
