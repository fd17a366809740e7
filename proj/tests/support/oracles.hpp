#pragma once

// Independent brute-force oracles. They use plain integer arithmetic mod a
// prime and enumerate polynomials or subsets directly; none of them calls the
// library's elimination, closure or counting code.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

// Monomials (exponent vectors) with individual degree <= p-1 and total
// degree <= d, in any fixed order.
std::vector<Vec> monomials(int n, int p, long long d);

int eval_monomial(const Vec& mono, const Vec& point, int p);

// Calls visit(values) for every polynomial with coefficients in F_p over
// `monos`, where values[j] is the polynomial at points[j].
void for_each_restriction(const std::vector<Vec>& monos, const std::vector<Vec>& points, int p,
                          const std::function<void(const Vec&)>& visit);

// h_S(d) as log_p of the number of distinct restrictions to S.
int hilbert(const std::vector<Vec>& s, int n, int p, long long d);

// cl_d(T): every point where each polynomial vanishing on T vanishes.
std::set<Vec> closure(const std::vector<Vec>& t, int n, int p, long long d);

// Fraction (num, den) of degree-d polynomials over F_2 constant on S.
std::pair<std::uint64_t, std::uint64_t> constant_fraction(const std::vector<Vec>& s, int n, long long d);

// All points of F_p^n (or a grid) in lex order.
std::vector<Vec> all_points(const std::vector<int>& radices);

// |M(k)_{<=d}| by listing the first k elements of the grid.
std::uint64_t low_weight_prefix(const std::vector<int>& radices, std::uint64_t k, long long d);

// min |T_{<=d}| over down-closed T, |T| = k, by filtering all 2^|F| subsets.
std::uint64_t min_low_weight(const std::vector<int>& radices, long long d, std::uint64_t k);

// Number of down-closed subsets of size k, by filtering all subsets.
std::uint64_t count_down_closed(const std::vector<int>& radices, std::uint64_t k);

bool dominates(const Vec& a, const Vec& b);
int weight(const Vec& x);

std::uint64_t binom_le(int n, long long d);

}  // namespace oracle
