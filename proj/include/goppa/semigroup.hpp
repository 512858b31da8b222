#ifndef GOPPA_SEMIGROUP_HPP
#define GOPPA_SEMIGROUP_HPP

#include <vector>

namespace goppa {

// Numerical semigroup <q, s> of pole orders at the point at infinity,
// gcd(q, s) = 1. Supplies gap sequences, Riemann-Roch dimensions and the
// monomial basis of L(m P_inf).

// all nonnegative integers <= m of the form i*q + j*s, i, j >= 0 (empty for m < 0)
std::vector<int> semigroup_elements_up_to(int q, int s, int m);

// complement of <q, s> in [0, 2g-1]; exactly g = (q-1)(s-1)/2 of them
std::vector<int> semigroup_gaps(int q, int s);

int semigroup_genus(int q, int s);

// dim L(m P_inf): 0 for m < 0, #elements <= m otherwise; m+1-g once m >= 2g-1
int riemann_roch_dim(int q, int s, int m);

struct Monomial {
    int x_exp;
    int y_exp;
    bool operator==(const Monomial& o) const { return x_exp == o.x_exp && y_exp == o.y_exp; }
};

inline int pole_order(const Monomial& mono, int q, int s) { return mono.x_exp * q + mono.y_exp * s; }

// x^i y^j with i*q + j*s <= m, i >= 0, 0 <= j <= q-1, sorted by pole order.
// Pole orders are pairwise distinct and are exactly the semigroup elements
// up to m, so the list has riemann_roch_dim(q, s, m) entries.
std::vector<Monomial> monomial_basis(int q, int s, int m);

}  // namespace goppa

#endif
