#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "drum/exact/charpoly.hpp"
#include "drum/exact/inertia.hpp"
#include "drum/exact/jacobi.hpp"
#include "drum/operators.hpp"
#include "drum/random.hpp"

namespace drum {

using exact::Inertia;
using exact::Poly;
using exact::SpectralSummary;

enum class BettiMethod { hodge, kirchhoff, hodge_spectrum, connection, combinatorial };

inline const char* betti_method_name(BettiMethod m) {
    switch (m) {
        case BettiMethod::hodge: return "hodge";
        case BettiMethod::kirchhoff: return "kirchhoff";
        case BettiMethod::hodge_spectrum: return "hodge-spectrum";
        case BettiMethod::connection: return "connection";
        case BettiMethod::combinatorial: return "combinatorial";
    }
    return "?";
}

struct BettiVector {
    std::vector<long long> b;
    BettiMethod method = BettiMethod::hodge;

    long long alternating_sum() const {
        long long t = 0;
        for (size_t k = 0; k < b.size(); ++k) t += (k % 2) ? -b[k] : b[k];
        return t;
    }

    friend bool operator==(const BettiVector& x, const BettiVector& y) {
        return x.b == y.b;  // method tag is provenance, not content
    }
};

/// b_k = dim ker(H_k), exact via ranks. Works in any dimension.
inline BettiVector betti_hodge(const Complex& K) {
    BettiVector r;
    r.method = BettiMethod::hodge;
    auto dh = dirac_and_hodge(K);
    for (const auto& block : dh.blocks)
        r.b.push_back(block.rows() - exact::rank_exact(block));
    return r;
}

/// Kirchhoff route: b0 = nullity, |E| = trace/2, b1 = b0 - |V| + |E|.
inline BettiVector betti_from_kirchhoff(const IntegerMatrix& h0) {
    if (!h0.is_symmetric())
        throw error(errc::not_kirchhoff, "Kirchhoff matrix must be symmetric");
    for (int i = 0; i < h0.rows(); ++i) {
        Int row = 0;
        for (int j = 0; j < h0.cols(); ++j) row += h0(i, j);
        if (row != 0)
            throw error(errc::not_kirchhoff, "Kirchhoff matrix must have zero row sums");
    }
    long long vertices = h0.rows();
    long long edges = (h0.trace() / 2).convert_to<long long>();
    long long b0 = h0.rows() - exact::rank_exact(h0);
    BettiVector r;
    r.method = BettiMethod::kirchhoff;
    r.b = {b0, b0 - vertices + edges};
    return r;
}

/// Hodge-spectrum route for 1-dim complexes: |E| = tr(H)/4, the nullity
/// b0+b1 comes from the exact inertia, and Euler-Poincare closes the system.
inline BettiVector betti_from_hodge_spectrum(const SpectralSummary& summary, int order,
                                             const Int& trace) {
    if (trace % 4 != 0)
        throw error(errc::not_one_dim_hodge,
                    "trace of a 1-dim Hodge matrix is 4|E|, got " + trace.str());
    long long edges = (trace / 4).convert_to<long long>();
    long long vertices = order - edges;
    long long nullity = summary.inertia.zero;       // b0 + b1
    long long difference = vertices - edges;        // b0 - b1
    if ((nullity + difference) % 2 != 0 || nullity + difference < 0)
        throw error(errc::not_one_dim_hodge, "spectral data is not a 1-dim Hodge matrix");
    BettiVector r;
    r.method = BettiMethod::hodge_spectrum;
    r.b = {(nullity + difference) / 2, (nullity - difference) / 2};
    return r;
}

/// Connection route, valid after Barycentric refinement: b0 and b1 are the
/// exact multiplicities of the eigenvalues 1 and -1 of L.
inline BettiVector betti_from_connection(const Complex& K) {
    if (!K.is_refinement() || K.dim() > 1)
        throw error(errc::needs_refinement,
                    "connection spectrum hears Betti numbers only on 1-dim refinements");
    IntegerMatrix L = connection_matrix(K);
    BettiVector r;
    r.method = BettiMethod::connection;
    r.b = {static_cast<long long>(exact::multiplicity_at(L, Rat(1))),
           static_cast<long long>(exact::multiplicity_at(L, Rat(-1)))};
    return r;
}

inline BettiVector betti_combinatorial(const Complex& K) {
    auto cc = components_and_cycles(K);
    BettiVector r;
    r.method = BettiMethod::combinatorial;
    r.b = {cc.b0, cc.b1};
    return r;
}

namespace detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

/// The complex must be a refinement of a 1-dimensional base.
inline bool is_one_dim_refinement(const Complex& K) {
    if (!K.is_refinement() || K.dim() > 1) return false;
    for (int d : K.origin_dims())
        if (d > 1) return false;
    return true;
}

}  // namespace detail

/// chi(G) = p - n for the exact inertia of the connection matrix, in any
/// dimension.
inline VerificationReport chi_from_inertia(const Complex& K) {
    detail::Timer timer;
    auto r = VerificationReport::pass("chi-inertia");
    Inertia in = exact::inertia_exact(connection_matrix(K));
    long long chi = euler_characteristic(K);
    if (in.positive - in.negative != chi)
        r.fail_with({"p - n", std::to_string(chi),
                     std::to_string(in.positive - in.negative), {}});
    r.elapsed_ms = timer.ms();
    return r;
}

/**
 * The Hydrogen theorem on a 1-dim refinement: R(L-g)R equals H exactly, and
 * the map lambda -> lambda - 1/lambda carries the numeric spectrum of L onto
 * the numeric spectrum of H as a multiset.
 */
inline VerificationReport verify_hydrogen(const Complex& K, double tol = 1e-8) {
    detail::Timer timer;
    auto r = VerificationReport::pass("hydrogen");
    if (!detail::is_one_dim_refinement(K)) {
        r.fail_with({"precondition", "1-dim Barycentric refinement", "other input", {}});
        return r;
    }
    auto bundle = OperatorBundle::build(K);
    IntegerMatrix lmg = bundle.L - bundle.g;
    IntegerMatrix conj = (*bundle.R) * lmg * (*bundle.R);
    const int n = K.size();
    Int max_diff = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int diff = abs(conj(i, j) - bundle.H(i, j));
            if (diff > max_diff) max_diff = diff;
            if (diff != 0 && r.passed)
                r.fail_with({"R(L-g)R vs H", bundle.H(i, j).str(), conj(i, j).str(),
                             std::make_pair(i, j)});
        }
    r.metrics["max-abs-diff"] = max_diff.convert_to<long long>();
    if (!r.passed) {
        r.elapsed_ms = timer.ms();
        return r;
    }
    // spectral image check
    auto sl = exact::eigenvalues_numeric(bundle.L);
    auto sh = exact::eigenvalues_numeric(bundle.H);
    std::vector<double> mapped;
    mapped.reserve(sl.size());
    for (double v : sl) mapped.push_back(v - 1.0 / v);
    std::sort(mapped.begin(), mapped.end());
    std::sort(sh.begin(), sh.end());
    for (size_t i = 0; i < sh.size(); ++i)
        if (std::fabs(mapped[i] - sh[i]) > tol) {
            r.fail_with({"multiset of lambda - 1/lambda vs sigma(H)",
                         detail::fmt(sh[i]), detail::fmt(mapped[i]),
                         std::make_pair(static_cast<int>(i), static_cast<int>(i))});
            break;
        }
    r.elapsed_ms = timer.ms();
    return r;
}

/**
 * Exact kernel bases of L -+ 1: eigenvectors to the eigenvalue 1 live on the
 * 0-dimensional simplex coordinates (one per component), eigenvectors to -1
 * on the 1-dimensional simplex coordinates (one per independent cycle).
 */
inline VerificationReport eigenvector_support_check(const Complex& K) {
    detail::Timer timer;
    auto r = VerificationReport::pass("support");
    if (!detail::is_one_dim_refinement(K)) {
        r.fail_with({"precondition", "1-dim Barycentric refinement", "other input", {}});
        return r;
    }
    IntegerMatrix L = connection_matrix(K);
    const int n = K.size();
    auto shifted = [&](int sign) {
        RationalMatrix a = exact::to_rational(L);
        for (int i = 0; i < n; ++i) a(i, i) -= sign;
        return exact::kernel_basis(a);
    };
    IntegerMatrix plus = shifted(1);    // ker(L - I)
    IntegerMatrix minus = shifted(-1);  // ker(L + I)
    auto cc = components_and_cycles(K);
    if (plus.cols() != cc.b0)
        r.fail_with({"dim ker(L-I)", std::to_string(cc.b0),
                     std::to_string(plus.cols()), {}});
    if (minus.cols() != cc.b1)
        r.fail_with({"dim ker(L+I)", std::to_string(cc.b1),
                     std::to_string(minus.cols()), {}});
    for (int c = 0; c < plus.cols() && r.passed; ++c)
        for (int i = 0; i < n; ++i)
            if (K.simplex(i).dim() != 0 && plus(i, c) != 0) {
                r.fail_with({"ker(L-I) support at " + K.simplex(i).to_string(), "0",
                             plus(i, c).str(), std::make_pair(i, c)});
                break;
            }
    for (int c = 0; c < minus.cols() && r.passed; ++c)
        for (int i = 0; i < n; ++i)
            if (K.simplex(i).dim() != 1 && minus(i, c) != 0) {
                r.fail_with({"ker(L+I) support at " + K.simplex(i).to_string(), "0",
                             minus(i, c).str(), std::make_pair(i, c)});
                break;
            }
    r.elapsed_ms = timer.ms();
    return r;
}

/**
 * Spectral bounds on a 1-dim refinement: rho(H) <= d_L + 1 - 1/(d_L+1) with
 * d_L the maximal connection-graph degree, and rho(H) <= 2d - 1/(2d) with d
 * the maximal graph degree. The second bound only dominates the first when
 * d >= 3 (for paths and cycles d_L + 1 = d + 3 > 2d and long instances
 * really do exceed 2d - 1/(2d), approaching 4), so it is skipped below that.
 * For connected complexes the top Kirchhoff eigenvalue must be simple.
 */
inline VerificationReport spectral_bounds_check(const Complex& K, double slack = 1e-9) {
    detail::Timer timer;
    auto r = VerificationReport::pass("bounds");
    if (!detail::is_one_dim_refinement(K)) {
        r.fail_with({"precondition", "1-dim Barycentric refinement", "other input", {}});
        return r;
    }
    auto bundle = OperatorBundle::build(K);
    auto sh = exact::eigenvalues_numeric(bundle.H);
    double rho = sh.empty() ? 0.0 : std::max(std::fabs(sh.front()), std::fabs(sh.back()));

    long long d_conn = 0;
    for (int i = 0; i < bundle.L.rows(); ++i) {
        Int row = 0;
        for (int j = 0; j < bundle.L.cols(); ++j) row += bundle.L(i, j);
        d_conn = std::max(d_conn, (row - 1).convert_to<long long>());
    }
    if (d_conn > 0) {
        double bound = d_conn + 1 - 1.0 / (d_conn + 1);
        if (rho > bound + slack)
            r.fail_with({"rho(H) <= d_L+1-1/(d_L+1)", "<= " + detail::fmt(bound),
                         detail::fmt(rho), {}});
    }

    auto g = drum::detail::graph_view(K);
    long long d = 0;
    for (int deg : g.degree) d = std::max(d, static_cast<long long>(deg));
    auto cc = components_and_cycles(K);
    if (d >= 3) {
        double bound = 2.0 * d - 1.0 / (2.0 * d);
        if (rho > bound + slack)
            r.fail_with({"rho(H) <= 2d-1/(2d)", "<= " + detail::fmt(bound),
                         detail::fmt(rho), {}});
    } else {
        r.note = "2d bound skipped: maximal degree <= 2";
    }

    if (cc.b0 == 1) {
        auto [off, cnt] = K.dim_range(0);
        auto s0 = exact::eigenvalues_numeric(bundle.H.block(off, off, cnt, cnt));
        if (s0.size() >= 2) {
            double gap = s0[0] - s0[1];
            std::string line = "perron-gap: " + detail::fmt(gap);
            r.note = r.note.empty() ? line : r.note + "; " + line;
            if (gap <= 1e-8)
                r.fail_with({"Perron gap of H0", "> 1e-8", detail::fmt(gap), {}});
        }
    } else {
        r.note = r.note.empty() ? "Perron check skipped: disconnected"
                                : r.note + "; Perron check skipped: disconnected";
    }
    r.elapsed_ms = timer.ms();
    return r;
}

/// Functional-equation consequence on 1-dim complexes: L^2 and g^2 have the
/// same exact characteristic polynomial.
inline VerificationReport functional_equation_check(const Complex& K) {
    detail::Timer timer;
    auto r = VerificationReport::pass("functional-eq");
    if (K.dim() > 1)
        throw error(errc::not_one_dimensional,
                    "functional equation holds for 1-dimensional complexes");
    IntegerMatrix L = connection_matrix(K);
    IntegerMatrix g = exact::to_integer(exact::inverse_exact(L));
    Poly pl = exact::charpoly_exact(L * L);
    Poly pg = exact::charpoly_exact(g * g);
    if (pl != pg)
        r.fail_with({"charpoly(L^2) vs charpoly(g^2)", "equal", "different", {}});
    r.elapsed_ms = timer.ms();
    return r;
}

namespace fixtures {

/// The two L-isospectral 1-dimensional complexes with different topology.
inline Complex isospectral_tree() {
    return Complex::generate({{1, 2}, {1, 3}, {2, 6}, {2, 7}, {6, 8}, {7, 4}, {4, 5}});
}

inline Complex isospectral_cycle_plus_edge() {
    return Complex::generate({{1, 2}, {1, 5}, {1, 7}, {2, 8}, {5, 6}, {8, 6}, {3, 4}});
}

inline Complex path_complex() { return Complex::generate({{1, 2}, {2, 3}}); }

/// Two triangles glued at a vertex; b = (1, 2).
inline Complex figure_eight() {
    return Complex::generate({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
}

inline Complex cycle_complex(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n, 1});
    return Complex::generate(edges);
}

}  // namespace fixtures

/**
 * The counterexample of the hearing story: equal connection spectra, different
 * Betti vectors, distinguished again after one refinement.
 */
inline VerificationReport isospectral_pair_demo() {
    detail::Timer timer;
    auto r = VerificationReport::pass("isospectral-demo");
    Complex a = fixtures::isospectral_tree();
    Complex b = fixtures::isospectral_cycle_plus_edge();
    if (exact::charpoly_exact(connection_matrix(a)) !=
        exact::charpoly_exact(connection_matrix(b)))
        r.fail_with({"charpoly(L) of the pair", "equal", "different", {}});
    auto ba = betti_combinatorial(a), bb = betti_combinatorial(b);
    if (ba.b != std::vector<long long>{1, 0})
        r.fail_with({"Betti of the tree", "(1,0)",
                     std::to_string(ba.b[0]) + "," + std::to_string(ba.b[1]), {}});
    if (bb.b != std::vector<long long>{2, 1})
        r.fail_with({"Betti of the cycle+edge", "(2,1)",
                     std::to_string(bb.b[0]) + "," + std::to_string(bb.b[1]), {}});
    auto ra = betti_from_connection(barycentric_refine(a));
    auto rb = betti_from_connection(barycentric_refine(b));
    if (ra.b == rb.b)
        r.fail_with({"refined multiplicities at +-1", "different", "equal", {}});
    if (ra.b != ba.b || rb.b != bb.b)
        r.fail_with({"refined multiplicities vs combinatorial", "equal", "different", {}});
    r.elapsed_ms = timer.ms();
    return r;
}

/// Plain CSV table: one header row plus string cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << row[i];
            os << "\n";
        }
        return os.str();
    }
};

/**
 * Exploratory search for spectral access to b2: per random complex, the
 * exact b2, the number of distinct eigenvalue classes of L (square-free
 * degree of the exact characteristic polynomial), the inertia and the first
 * four power traces. No assertion; the question is open.
 */
inline CsvTable b2_experiment(int trials, int n, int m, uint64_t seed) {
    if (trials < 1)
        throw error(errc::bad_parameter, "b2_experiment needs trials >= 1");
    CsvTable t;
    t.header = {"trial",  "order", "dim",       "chi",       "b0",
                "b1",     "b2",    "distinct_eigenvalues",   "inertia_p",
                "inertia_n", "inertia_z", "trace_L1", "trace_L2", "trace_L3",
                "trace_L4"};
    for (int trial = 0; trial < trials; ++trial) {
        Complex K = random_complex(n, m, seed + static_cast<uint64_t>(trial));
        IntegerMatrix L = connection_matrix(K);
        Poly cp = exact::charpoly_exact(L);
        Inertia in = exact::inertia_exact(L);
        BettiVector betti = betti_hodge(K);
        auto b_at = [&](size_t k) {
            return k < betti.b.size() ? betti.b[k] : 0;
        };
        std::vector<std::string> row;
        row.push_back(std::to_string(trial));
        row.push_back(std::to_string(K.size()));
        row.push_back(std::to_string(K.dim()));
        row.push_back(std::to_string(euler_characteristic(K)));
        row.push_back(std::to_string(b_at(0)));
        row.push_back(std::to_string(b_at(1)));
        row.push_back(std::to_string(b_at(2)));
        row.push_back(std::to_string(exact::distinct_root_count(cp)));
        row.push_back(std::to_string(in.positive));
        row.push_back(std::to_string(in.negative));
        row.push_back(std::to_string(in.zero));
        IntegerMatrix power = L;
        for (int k = 1; k <= 4; ++k) {
            row.push_back(power.trace().str());
            if (k < 4) power = power * L;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace drum
