#ifndef GRAPHLIM_DEFINETTI_HPP
#define GRAPHLIM_DEFINETTI_HPP

#include "graphlim/mobius.hpp"

namespace graphlim {

// Distribution of the subgraph induced by the first m nodes. m <= n.
GraphDistribution induced_marginal(const GraphDistribution& p, int m);

// The exchangeable approximant: mixture over G of the with-replacement
// sampling distribution on [m], weighted by P(G). Always exchangeable and a
// valid distribution; its Mobius parameters are sum_G t_hom(., G) P(G).
GraphDistribution smooth_distribution(const GraphDistribution& p, int m);

struct DeFinettiReport {
    int m = 0;
    int n = 0;
    double tv_half_sum = 0.0;   // half the l1 distance between the marginals
    double tv_two_sup = 0.0;      // 2 * sup over atoms |mu_m(F) - mu*_m(F)|
    double r_bound = 0.0;       // 1 - (n)_m / n^m
    double loose_bound = 0.0;   // m(m-1)/n
};

// Compares the m-marginal of an exchangeable P with its smoothed version and
// checks tv_two_sup <= 2 r_bound <= loose_bound. Throws DomainError if P is not
// exchangeable within tol, and logic_error if the bound chain fails (that
// would be an implementation bug).
DeFinettiReport definetti_report(const GraphDistribution& p, int m, double tol = 1e-9);

} // namespace graphlim

#endif
