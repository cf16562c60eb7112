#ifndef GRAPHLIM_CHARACTERS_HPP
#define GRAPHLIM_CHARACTERS_HPP

#include <map>
#include <vector>

#include "graphlim/graphs.hpp"
#include "graphlim/mobius.hpp"

namespace graphlim {

enum class FunctionalSource { distribution, graph_character, graphon, user };

// Real-valued function on isomorphism classes up to n_max nodes. Carries
// candidate characters, Mobius parameters of exchangeable distributions, and
// the canonical parameters of the exponential family below.
struct SymmetricFunctional {
    int n_max = 0;
    FunctionalSource source = FunctionalSource::user;
    std::map<UnlabeledGraph, double> values;

    double at(const UnlabeledGraph& u) const;
    double at_graph(const LabeledGraph& g) const { return at(to_unlabeled(g)); }
    void set(const UnlabeledGraph& u, double value) { values[u] = value; }
};

// phi([F]) = Z(F) on every class with at most n_max nodes (default: all of
// them, n_max = P.n).
SymmetricFunctional functional_from_distribution(const GraphDistribution& p, int n_max = -1);

// The homomorphism-density character of a fixed class: phi([F]) = t_hom(F, G).
SymmetricFunctional functional_from_graph(const UnlabeledGraph& g, int n_max);

// phi([F]) = base^{e(F)}; multiplicative since edge counts add over disjoint
// unions (the Erdos-Renyi character when base is in [0,1]).
SymmetricFunctional edge_power_functional(double base, int n_max);

// t_hom(F, G) through class representatives.
double rho_from_graph(const UnlabeledGraph& g, const UnlabeledGraph& f);

struct MultiplicativityCheck {
    bool passes = true;
    double worst_violation = 0.0;
    UnlabeledGraph worst_left, worst_right;
};

// Verifies phi([F1] + [F2]) = phi([F1]) phi([F2]) over every class pair with
// combined node count <= n_max.
MultiplicativityCheck check_character(const SymmetricFunctional& phi, double tol = 1e-9);

// Same factorization test read as dissociation of Mobius parameters:
// extreme (character) inputs pass, proper mixtures generally fail.
MultiplicativityCheck check_dissociated(const SymmetricFunctional& z, double tol = 1e-9);

using Matrix = std::vector<std::vector<double>>;

// M[u][v] = phi(basis[u] + basis[v]). Every pairwise union must stay within
// n_max.
Matrix reflection_matrix(const SymmetricFunctional& phi,
                         const std::vector<UnlabeledGraph>& basis);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations (off-diagonal
// threshold 1e-13), ascending. Self-contained on purpose: no external
// numerics dependency.
std::vector<double> symmetric_eigenvalues(Matrix a);

struct PsdCheck {
    bool psd = true;
    double min_eigenvalue = 0.0;
};

// Positive semidefiniteness up to tol; throws DomainError if the input is
// asymmetric beyond tol.
PsdCheck is_psd(const Matrix& m, double tol = 1e-9);

// Generalized exponential family mass function on labeled graphs:
// mass(G) = theta([G]) * base(G) / c, c = sum of theta([G]) base(G).
// theta must be nonnegative on the n-node classes, base nonnegative and not
// identically zero (indexed by edge mask); c = 0 raises
// DegenerateFamilyError. Exchangeable whenever base is permutation-invariant.
GraphDistribution gexp_mass(const SymmetricFunctional& theta,
                            const std::vector<double>& base, int n);

} // namespace graphlim

#endif
