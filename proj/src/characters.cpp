#include "graphlim/characters.hpp"

#include <algorithm>
#include <cmath>

#include "graphlim/homomorphisms.hpp"

namespace graphlim {

double SymmetricFunctional::at(const UnlabeledGraph& u) const {
    const auto it = values.find(u);
    if (it == values.end())
        throw DomainError("functional has no value for class " + u.canon.encode());
    return it->second;
}

SymmetricFunctional functional_from_distribution(const GraphDistribution& p, int n_max) {
    if (n_max < 0) n_max = p.n;
    if (n_max > p.n)
        throw DomainError("functional_from_distribution: n_max exceeds the distribution's node count");
    SymmetricFunctional phi;
    phi.n_max = n_max;
    phi.source = FunctionalSource::distribution;
    for (const auto& cls : classes_up_to(n_max)) {
        // Embed the representative into [n]; Z ignores the padding isolates.
        std::uint32_t mask = 0;
        const int m = cls.node_count();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (cls.canon.has_edge(i, j))
                    mask |= std::uint32_t{1} << pair_index(p.n, i, j);
        phi.set(cls, z_value(p, mask));
    }
    return phi;
}

SymmetricFunctional functional_from_graph(const UnlabeledGraph& g, int n_max) {
    SymmetricFunctional phi;
    phi.n_max = n_max;
    phi.source = FunctionalSource::graph_character;
    for (const auto& cls : classes_up_to(n_max))
        phi.set(cls, rho_from_graph(g, cls));
    return phi;
}

SymmetricFunctional edge_power_functional(double base, int n_max) {
    SymmetricFunctional phi;
    phi.n_max = n_max;
    phi.source = FunctionalSource::user;
    for (const auto& cls : classes_up_to(n_max)) {
        double v = 1.0;
        for (int e = 0; e < cls.edge_count(); ++e) v *= base;
        phi.set(cls, v);
    }
    return phi;
}

double rho_from_graph(const UnlabeledGraph& g, const UnlabeledGraph& f) {
    return densities(f.canon, g.canon).t_hom.to_double();
}

namespace {

MultiplicativityCheck factorization_scan(const SymmetricFunctional& phi, double tol) {
    MultiplicativityCheck check;
    const auto classes = classes_up_to(phi.n_max);
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a; b < classes.size(); ++b) {
            if (classes[a].node_count() + classes[b].node_count() > phi.n_max) continue;
            const UnlabeledGraph joint = disjoint_union(classes[a], classes[b]);
            const double violation =
                std::abs(phi.at(joint) - phi.at(classes[a]) * phi.at(classes[b]));
            if (violation > check.worst_violation) {
                check.worst_violation = violation;
                check.worst_left = classes[a];
                check.worst_right = classes[b];
            }
        }
    }
    check.passes = check.worst_violation <= tol;
    return check;
}

} // namespace

MultiplicativityCheck check_character(const SymmetricFunctional& phi, double tol) {
    return factorization_scan(phi, tol);
}

MultiplicativityCheck check_dissociated(const SymmetricFunctional& z, double tol) {
    return factorization_scan(z, tol);
}

Matrix reflection_matrix(const SymmetricFunctional& phi,
                         const std::vector<UnlabeledGraph>& basis) {
    const std::size_t k = basis.size();
    for (const auto& u : basis)
        for (const auto& v : basis)
            if (u.node_count() + v.node_count() > phi.n_max)
                throw CapacityError("reflection_matrix: union of " + u.canon.encode() + " and " +
                                    v.canon.encode() + " exceeds the functional's range");
    Matrix m(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            m[a][b] = m[b][a] = phi.at(disjoint_union(basis[a], basis[b]));
        }
    }
    return m;
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
    const std::size_t n = a.size();
    // Cyclic Jacobi: sweep all upper pairs, rotate each away, until every
    // off-diagonal entry is below threshold. Quadratic convergence makes a
    // generous sweep cap unreachable for the tiny matrices used here.
    constexpr double kOffDiagonalThreshold = 1e-13;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(a[p][q]));
        if (off < kOffDiagonalThreshold) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < kOffDiagonalThreshold) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = a[p][r], aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

PsdCheck is_psd(const Matrix& m, double tol) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("is_psd: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m[i][j] - m[j][i]) > tol)
                throw DomainError("is_psd: matrix is not symmetric within tolerance");
    PsdCheck check;
    if (n == 0) return check;
    const auto eig = symmetric_eigenvalues(m);
    check.min_eigenvalue = eig.front();
    check.psd = check.min_eigenvalue >= -tol;
    return check;
}

GraphDistribution gexp_mass(const SymmetricFunctional& theta,
                            const std::vector<double>& base, int n) {
    GraphDistribution p(n);
    if (base.size() != p.mass.size())
        throw DomainError("gexp_mass: base weights must cover all labeled graphs on [n]");
    bool any = false;
    for (double b : base) {
        if (b < 0.0) throw DomainError("gexp_mass: base weights must be nonnegative");
        if (b > 0.0) any = true;
    }
    if (!any) throw DomainError("gexp_mass: base weights are identically zero");

    // theta evaluated once per class, spread over the class via the canon table.
    const auto& canon = canonical_mask_table(n);
    std::vector<double> theta_of_mask(p.mass.size(), 0.0);
    for (const auto& cls : isomorphism_classes(n)) {
        const double v = theta.at(cls);
        if (v < 0.0)
            throw DomainError("gexp_mass: theta must be nonnegative on the n-node classes");
        theta_of_mask[cls.canon.mask()] = v;
    }
    long double c = 0.0;
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        p.mass[mask] = theta_of_mask[canon[mask]] * base[mask];
        c += p.mass[mask];
    }
    if (c <= 0.0)
        throw DegenerateFamilyError("gexp_mass: normalizer c(theta) vanishes");
    for (auto& v : p.mass) v = static_cast<double>(v / c);
    return p;
}

} // namespace graphlim
