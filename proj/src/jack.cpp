#include "rieszlab/jack.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "rieszlab/hwv.hpp"

namespace rieszlab {

namespace {

// ---------------------------------------------------------------------
// Symbolic layer: symmetric functions of a fixed weight k, held as
// coefficient vectors over the partitions of k. All coefficients in the
// construction are exact small integers times powers of alpha, so long
// double arithmetic keeps them well inside 1e-15 of exact.
// ---------------------------------------------------------------------

using Coeffs = std::vector<long double>;

struct WeightSpace {
    int k;
    std::vector<Partition> parts;          // decreasing lex order; parts[0] = (k)
    std::map<Partition, int> index;

    explicit WeightSpace(int k_) : k(k_), parts(Partition::all_of_weight(k_)) {
        for (size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
    }
    int size() const { return static_cast<int>(parts.size()); }
};

// Multiply an augmented-monomial expansion by the power sum p_r.
// Product rule: maug_lambda * p_r = sum_j maug_{lambda + r e_j}
//                                   + maug_{lambda with part r appended}.
std::map<Partition, long double> multiply_by_power_sum(
    const std::map<Partition, long double>& f, int r) {
    std::map<Partition, long double> out;
    for (const auto& [lam, c] : f) {
        std::vector<int> base = lam.parts();
        for (size_t j = 0; j < base.size(); ++j) {
            std::vector<int> next = base;
            next[j] += r;
            std::sort(next.begin(), next.end(), std::greater<int>());
            out[Partition(next)] += c;
        }
        std::vector<int> appended = base;
        appended.push_back(r);
        std::sort(appended.begin(), appended.end(), std::greater<int>());
        out[Partition(appended)] += c;
    }
    return out;
}

// p_mu in the plain monomial basis of weight |mu|.
Coeffs power_sum_in_monomials(const Partition& mu, const WeightSpace& ws) {
    std::map<Partition, long double> aug;
    aug[Partition()] = 1.0L;
    for (int part : mu.parts()) aug = multiply_by_power_sum(aug, part);

    Coeffs out(ws.size(), 0.0L);
    for (const auto& [lam, c] : aug) {
        // maug_lambda = (prod_v mult_v!) m_lambda
        long double fac = 1.0L;
        const auto& p = lam.parts();
        for (size_t i = 0; i < p.size();) {
            size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            for (size_t t = 2; t <= j - i; ++t) fac *= static_cast<long double>(t);
            i = j;
        }
        out[ws.index.at(lam)] += c * fac;
    }
    return out;
}

long double z_lambda(const Partition& lam) {
    long double z = 1.0L;
    const auto& p = lam.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const size_t mult = j - i;
        for (size_t t = 1; t <= mult; ++t) z *= static_cast<long double>(t) * p[i];
        i = j;
    }
    return z;
}

struct JackTable {
    int k;
    long double alpha;
    std::vector<Partition> parts;                  // decreasing lex
    std::vector<Coeffs> c_in_monomials;            // row per partition
};

// Build the weight-k table: Gram-Schmidt of the monomial basis under the
// alpha-deformed power-sum inner product (increasing lex order keeps the
// transition unitriangular with respect to dominance), then scale by the
// sum rule to the C-normalization.
JackTable build_table(int k, long double alpha) {
    const WeightSpace ws(k);
    const int n = ws.size();

    // m_lambda in power sums: invert the integer matrix p -> m.
    std::vector<Coeffs> p2m(n);
    for (int i = 0; i < n; ++i) p2m[i] = power_sum_in_monomials(ws.parts[i], ws);

    std::vector<Coeffs> m2p(n, Coeffs(n, 0.0L));
    {
        // Gaussian elimination with partial pivoting on [P2M^T | I].
        std::vector<Coeffs> a(n, Coeffs(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[j][i] = p2m[i][j];   // column i = p_i in m
        for (int i = 0; i < n; ++i) m2p[i][i] = 1.0L;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs((double)a[r][col]) > std::fabs((double)a[piv][col])) piv = r;
            std::swap(a[piv], a[col]);
            std::swap(m2p[piv], m2p[col]);
            const long double d = a[col][col];
            for (int j = 0; j < n; ++j) { a[col][j] /= d; m2p[col][j] /= d; }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const long double f = a[r][col];
                if (f == 0.0L) continue;
                for (int j = 0; j < n; ++j) {
                    a[r][j] -= f * a[col][j];
                    m2p[r][j] -= f * m2p[col][j];
                }
            }
        }
        // m2p now holds the inverse of the (m <- p) column matrix; its
        // transpose gives row lam as  m_lam = sum_mu m2p[lam][mu] p_mu.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) std::swap(m2p[i][j], m2p[j][i]);
    }

    // Gram matrix of the monomial basis: <p_mu, p_mu> = z_mu alpha^{l(mu)}.
    std::vector<long double> pnorm(n);
    for (int i = 0; i < n; ++i)
        pnorm[i] = z_lambda(ws.parts[i]) *
                   std::pow(alpha, static_cast<long double>(ws.parts[i].length()));
    std::vector<Coeffs> gram(n, Coeffs(n, 0.0L));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long double s = 0;
            for (int t = 0; t < n; ++t) s += m2p[i][t] * m2p[j][t] * pnorm[t];
            gram[i][j] = gram[j][i] = s;
        }

    auto inner = [&](const Coeffs& u, const Coeffs& v) {
        long double s = 0;
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0.0L) continue;
            long double row = 0;
            for (int j = 0; j < n; ++j) row += gram[i][j] * v[j];
            s += u[i] * row;
        }
        return s;
    };

    // Orthogonalize from the bottom of the lex order upward: basis[i]
    // holds P_{parts[i]} = m_{parts[i]} + lower-order monomials.
    std::vector<Coeffs> basis(n, Coeffs(n, 0.0L));
    std::vector<long double> norms(n);
    for (int i = n - 1; i >= 0; --i) {
        Coeffs b(n, 0.0L);
        b[i] = 1.0L;
        for (int j = n - 1; j > i; --j) {
            Coeffs unit(n, 0.0L);
            unit[i] = 1.0L;
            const long double proj = inner(unit, basis[j]) / norms[j];
            if (proj != 0.0L)
                for (int t = 0; t < n; ++t) b[t] -= proj * basis[j][t];
        }
        norms[i] = inner(b, b);
        basis[i] = std::move(b);
    }

    // Sum rule: coefficients gamma with sum_lam gamma_lam P_lam = p_1^k.
    const Coeffs e1k = power_sum_in_monomials(
        Partition(std::vector<int>(static_cast<size_t>(k), 1)), ws);
    std::vector<long double> gamma(n, 0.0L);
    for (int i = 0; i < n; ++i) {                  // decreasing lex: (k) first
        long double g = e1k[i];
        for (int j = 0; j < i; ++j) g -= gamma[j] * basis[j][i];
        gamma[i] = g;                              // basis[i][i] == 1
    }

    JackTable table;
    table.k = k;
    table.alpha = alpha;
    table.parts = ws.parts;
    table.c_in_monomials.resize(n);
    for (int i = 0; i < n; ++i) {
        Coeffs row(n);
        for (int j = 0; j < n; ++j) row[j] = gamma[i] * basis[i][j];
        table.c_in_monomials[i] = std::move(row);
    }
    return table;
}

// Cache of built tables, keyed by (weight, beta).
const JackTable& table_for(int k, int beta) {
    if (beta != 1 && beta != 2 && beta != 4 && beta != 8)
        throw DomainError("jack: beta must be one of 1, 2, 4, 8");
    static std::mutex mu;
    static std::map<std::pair<int, int>, JackTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, beta});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(k, beta), build_table(k, 2.0L / beta)).first;
    return it->second;
}

// Monomial symmetric function at x: sum over distinct rearrangements of
// the exponent vector padded to the number of variables.
long double monomial_at(const Partition& mu, const std::vector<double>& x) {
    const int m = static_cast<int>(x.size());
    if (mu.length() > m) return 0.0L;
    std::vector<int> expo(m, 0);
    for (int i = 0; i < mu.length(); ++i) expo[i] = mu[i];
    std::sort(expo.begin(), expo.end());
    long double total = 0;
    do {
        long double term = 1;
        for (int i = 0; i < m; ++i) {
            if (expo[i] == 0) continue;
            term *= std::pow(static_cast<long double>(x[i]), expo[i]);
        }
        total += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return total;
}

} // namespace

double jack_C(const Partition& tau, const std::vector<double>& eigenvalues, int beta) {
    const int k = tau.weight();
    if (k == 0) return 1.0;
    if (k > jack_default_k_max)
        throw WeightTooLarge("jack_C: partition weight " + std::to_string(k) +
                             " exceeds the table limit " +
                             std::to_string(jack_default_k_max));
    if (tau.length() > static_cast<int>(eigenvalues.size())) return 0.0;
    for (double v : eigenvalues)
        if (!(v >= 0.0)) throw DomainError("jack_C: eigenvalues must be nonnegative");

    const JackTable& t = table_for(k, beta);
    const int row = static_cast<int>(
        std::find(t.parts.begin(), t.parts.end(), tau) - t.parts.begin());
    long double s = 0;
    for (size_t j = 0; j < t.parts.size(); ++j) {
        const long double c = t.c_in_monomials[row][j];
        if (c == 0.0L) continue;
        s += c * monomial_at(t.parts[j], eigenvalues);
    }
    return static_cast<double>(s);
}

double jack_C_identity(const Partition& tau, int m, int beta) {
    return jack_C(tau, std::vector<double>(m, 1.0), beta);
}

McEstimate spherical_average_q(RngStream& rng, const Partition& tau, const HermitianPD& l,
                               int beta, long n_samples) {
    Algebra alg = Algebra::of(beta);
    alg.require_full_matrix("spherical_average_q");
    if (n_samples < 1) throw DomainError("spherical_average_q: need n_samples >= 1");
    const int m = l.dim();
    const WeightVector w = tau.as_weight(m);

    double sum = 0, sumsq = 0;
    for (long i = 0; i < n_samples; ++i) {
        const AlgMatrix h = haar_stiefel(rng, m, m, alg);
        const HermitianPD z(h * l.mat() * h.adjoint(), 1e-9);
        const double q = std::exp(log_q_kappa(z, w));
        sum += q;
        sumsq += q * q;
    }
    McEstimate est;
    est.n = n_samples;
    est.mean = sum / n_samples;
    const double var = std::max(0.0, sumsq / n_samples - est.mean * est.mean);
    est.std_error = std::sqrt(var / n_samples);
    return est;
}

JackTableView jack_table_view(int weight, int beta) {
    JackTableView view;
    view.weight = weight;
    view.alpha = 2.0 / beta;
    if (weight == 0) return view;
    const JackTable& t = table_for(weight, beta);
    for (size_t i = 0; i < t.parts.size(); ++i) {
        std::vector<std::pair<Partition, double>> row;
        for (size_t j = 0; j < t.parts.size(); ++j)
            if (t.c_in_monomials[i][j] != 0.0L)
                row.emplace_back(t.parts[j], static_cast<double>(t.c_in_monomials[i][j]));
        view.rows.emplace_back(t.parts[i], std::move(row));
    }
    return view;
}

} // namespace rieszlab
