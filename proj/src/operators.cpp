#include "monocert/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocert {

namespace {

// Suffix sums sum_{i>n} alpha_i x*_i for n = 0..K, K = max support.
std::vector<Rational> alpha_weighted_suffix(const AlphaSpec& alpha, const FiniteVec& xstar,
                                            int K) {
    std::vector<Rational> suffix(static_cast<size_t>(K) + 1, Rational(0));
    for (int n = K - 1; n >= 0; --n) {
        suffix[static_cast<size_t>(n)] =
            suffix[static_cast<size_t>(n) + 1] + alpha.at(n + 1) * xstar.at(n + 1);
    }
    return suffix;
}

}  // namespace

FiniteVec apply_A_alpha(const AlphaSpec& alpha, const FiniteVec& xstar) {
    int K = xstar.max_support();
    FiniteVec out;
    if (K == 0) return out;
    auto suffix = alpha_weighted_suffix(alpha, xstar, K);
    for (int n = 1; n <= K; ++n) {
        const Rational& an = alpha.at(n);
        Rational v = an * an * xstar.at(n) + 2 * an * suffix[static_cast<size_t>(n)];
        out.set(n, v);
    }
    return out;  // coordinates beyond K carry an empty suffix sum
}

EventualVec apply_P_alpha(const AlphaSpec& alpha, const FiniteVec& xstar) {
    Rational c = pair(xstar, EventualVec::multiple_of_alpha(Rational(1), alpha));
    return EventualVec::multiple_of_alpha(c, alpha);
}

EventualVec apply_S_alpha(const AlphaSpec& alpha, const FiniteVec& xstar) {
    int K = xstar.max_support();
    auto suffix = alpha_weighted_suffix(alpha, xstar, K);
    Rational total = K > 0 ? suffix[0] : Rational(0);  // <alpha, x*>
    std::vector<Rational> prefix;
    prefix.reserve(static_cast<size_t>(K));
    Rational below(0);  // sum_{i<n} alpha_i x*_i
    for (int n = 1; n <= K; ++n) {
        prefix.push_back(alpha.at(n) * (suffix[static_cast<size_t>(n)] - below));
        below += alpha.at(n) * xstar.at(n);
    }
    // Beyond the support the upper sum is empty and the lower sum is total.
    return EventualVec(std::move(prefix), -total, alpha);
}

EventualVec apply_G(const FiniteVec& xstar) {
    int K = xstar.max_support();
    std::vector<Rational> suffix(static_cast<size_t>(K) + 1, Rational(0));
    for (int n = K - 1; n >= 0; --n)
        suffix[static_cast<size_t>(n)] = suffix[static_cast<size_t>(n) + 1] + xstar.at(n + 1);
    Rational total = K > 0 ? suffix[0] : Rational(0);
    std::vector<Rational> prefix;
    prefix.reserve(static_cast<size_t>(K));
    Rational below(0);
    for (int n = 1; n <= K; ++n) {
        prefix.push_back(suffix[static_cast<size_t>(n)] - below);
        below += xstar.at(n);
    }
    return EventualVec(std::move(prefix), -total, AlphaSpec::ones());
}

EventualVec adjoint_A_alpha(const AlphaSpec& alpha, const FiniteVec& xstar) {
    return apply_P_alpha(alpha, xstar) - apply_S_alpha(alpha, xstar);
}

// ----------------------------------------------------------- graph samples

GraphSample GraphSample::scaled(const Rational& t) const {
    GraphSample out{*this};
    for (auto& p : out.points) {
        p.first = std::visit([&](const auto& v) -> AnyVec { return t * v; }, p.first);
        p.second = std::visit([&](const auto& v) -> AnyVec { return t * v; }, p.second);
    }
    out.generator += " scaled by " + rat_str(t);
    return out;
}

namespace {

void insist_points_distinct(const GraphSample& g) {
    for (size_t i = 0; i < g.points.size(); ++i)
        for (size_t j = i + 1; j < g.points.size(); ++j)
            if (g.points[i].first == g.points[j].first &&
                g.points[i].second == g.points[j].second)
                throw std::logic_error("graph sample contains duplicate points");
}

}  // namespace

GraphSample graph_T_alpha(const AlphaSpec& alpha, int N, bool pairwise_sums) {
    std::vector<FiniteVec> kernel = kernel_basis(alpha, N);
    std::vector<FiniteVec> inputs = kernel;
    if (pairwise_sums) {
        for (size_t i = 0; i < kernel.size(); ++i)
            for (size_t j = i + 1; j < kernel.size(); ++j)
                inputs.push_back(kernel[i] + kernel[j]);
    }
    GraphSample g;
    g.alpha = alpha;
    g.N = N;
    g.generator = "T_alpha(alpha=" + alpha.str() + ", N=" + std::to_string(N) +
                  (pairwise_sums ? ", pairwise)" : ")");
    for (const auto& v : inputs) {
        FiniteVec image = -apply_A_alpha(alpha, v);
        // On the kernel, S v = A v, so the defining formula holds with either;
        // verify the membership conditions exactly before accepting the point.
        if (pair(v, EventualVec::multiple_of_alpha(Rational(1), alpha)) != 0)
            throw std::logic_error("graph_T_alpha: input escaped the kernel");
        EventualVec sv = apply_S_alpha(alpha, v);
        if (!sv.has_zero_tail() || !(sv.to_finite() == apply_A_alpha(alpha, v)))
            throw std::logic_error("graph_T_alpha: S and A disagree on a kernel vector");
        g.points.push_back({AnyVec(image), AnyVec(v)});
    }
    insist_points_distinct(g);
    return g;
}

GraphSample graph_T_star(const AlphaSpec& alpha, int N,
                         const std::vector<Rational>& r_values) {
    GraphSample g;
    g.alpha = alpha;
    g.N = N;
    g.generator = "T_star(alpha=" + alpha.str() + ", N=" + std::to_string(N) + ")";
    std::vector<FiniteVec> inputs{FiniteVec{}};
    for (int k = 1; k <= N; ++k) inputs.push_back(FiniteVec::unit(k));
    for (const auto& r : r_values) {
        for (const auto& xs : inputs) {
            EventualVec first =
                apply_S_alpha(alpha, xs) + EventualVec::multiple_of_alpha(r, alpha);
            g.points.push_back({AnyVec(first), AnyVec(xs)});
        }
    }
    insist_points_distinct(g);
    return g;
}

// -------------------------------------------------- subdifferential oracles

SupNormSubdiff subdiff_supnorm(const FiniteVec& x) {
    SupNormSubdiff d;
    d.x_ = x;
    d.norm_value = norm_sup(x);
    d.at_zero = x.is_zero();
    if (!d.at_zero) {
        for (const auto& [n, v] : x.entries())
            if (rat_abs(v) == d.norm_value) d.attaining.push_back(n);
    }
    return d;
}

bool SupNormSubdiff::contains(const FiniteVec& xstar) const {
    if (at_zero) return norm_l1(xstar) <= 1;
    return norm_l1(xstar) == 1 && pair(x_, xstar) == norm_value;
}

std::vector<FiniteVec> SupNormSubdiff::vertices(int up_to) const {
    std::vector<FiniteVec> out;
    if (at_zero) {
        for (int k = 1; k <= up_to; ++k) {
            out.push_back(FiniteVec::unit(k));
            out.push_back(-FiniteVec::unit(k));
        }
        return out;
    }
    for (int m : attaining) {
        out.push_back(rat_sign(x_.at(m)) >= 0 ? FiniteVec::unit(m) : -FiniteVec::unit(m));
    }
    return out;
}

DualityMapSet duality_map_halfsq(const FiniteVec& x) {
    DualityMapSet d;
    d.x_ = x;
    d.norm_value = norm_sup(x);
    return d;
}

bool DualityMapSet::contains(const FiniteVec& xstar) const {
    if (norm_value == 0) return xstar.is_zero();
    return norm_l1(xstar) == norm_value && pair(x_, xstar) == norm_value * norm_value;
}

GraphSample graph_T_plus_subdiff(const AlphaSpec& alpha, int N, const SubdiffTag& f) {
    if (f.kind == SubdiffTag::Kind::ScaledHalfSupNormSq && f.lambda <= 0)
        throw std::invalid_argument("graph_T_plus_subdiff: lambda must be > 0");
    GraphSample base = graph_T_alpha(alpha, N, /*pairwise_sums=*/false);
    GraphSample g;
    g.alpha = alpha;
    g.N = N;
    g.generator = "T_plus_subdiff(alpha=" + alpha.str() + ", N=" + std::to_string(N) +
                  (f.kind == SubdiffTag::Kind::SupNorm
                       ? ", f=supnorm)"
                       : ", f=" + rat_str(f.lambda) + "/2*supnorm^2)");
    auto add_points = [&](const FiniteVec& x, const FiniteVec& xs) {
        SupNormSubdiff sd = subdiff_supnorm(x);
        for (const auto& vert : sd.vertices(/*up_to=*/1)) {
            FiniteVec s = vert;
            if (f.kind == SubdiffTag::Kind::ScaledHalfSupNormSq) {
                // subdiff of (lambda/2)||.||^2 = lambda ||x|| * subdiff ||.||(x)
                s = (f.lambda * sd.norm_value) * s;
                if (x.is_zero()) s = FiniteVec{};  // J(0) = {0}
            }
            g.points.push_back({AnyVec(x), AnyVec(xs + s)});
        }
    };
    for (const auto& p : base.points)
        add_points(std::get<FiniteVec>(p.first), std::get<FiniteVec>(p.second));
    add_points(FiniteVec{}, FiniteVec{});  // the zero graph point of T
    return g;
}

// ------------------------------------------- dual-side (predual) operator

EventualVec dual_gossez_coeffs(const FiniteVec& ystar_coeffs, int N) {
    if (N < 1) throw std::invalid_argument("dual_gossez_coeffs: N must be >= 1");
    return apply_G(ystar_coeffs);
}

Rational dual_gossez_telescope(const FiniteVec& ystar_coeffs, int k) {
    Rational acc(0);
    // R_n = sum_{i>=n} y*_i computed backwards from max(k+1, support).
    int top = std::max(k + 1, ystar_coeffs.max_support() + 1);
    std::vector<Rational> R(static_cast<size_t>(top) + 2, Rational(0));
    for (int n = top; n >= 1; --n)
        R[static_cast<size_t>(n)] = R[static_cast<size_t>(n) + 1] + ystar_coeffs.at(n);
    for (int n = 1; n <= k; ++n)
        acc += (R[static_cast<size_t>(n)] + R[static_cast<size_t>(n) + 1]) *
               ystar_coeffs.at(n);
    return acc;
}

EventualVec dual_gossez_plus_rank1(const FiniteVec& ystar_coeffs, int N) {
    Rational s = pair(ystar_coeffs, EventualVec::multiple_of_alpha(Rational(1), AlphaSpec::ones()));
    return dual_gossez_coeffs(ystar_coeffs, N) +
           EventualVec::multiple_of_alpha(s, AlphaSpec::ones());
}

// ------------------------------------------------------ operator transport

LinearMap::LinearMap(std::vector<std::vector<Rational>> rows, bool require_injective)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("LinearMap: empty matrix");
    size_t cols = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != cols) throw std::invalid_argument("LinearMap: ragged matrix");
    injective_ = matrix_rank(rows_) == static_cast<int>(cols);
    if (require_injective && !injective_)
        throw std::invalid_argument("LinearMap: columns are dependent");
}

LinearMap LinearMap::identity(int n) { return scaling(n, Rational(1)); }

LinearMap LinearMap::scaling(int n, const Rational& c) {
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = c;
    return LinearMap(std::move(rows));
}

FiniteVec LinearMap::apply(const FiniteVec& x) const {
    if (x.max_support() > in_dim())
        throw std::invalid_argument("LinearMap::apply: vector exceeds input dimension");
    FiniteVec out;
    for (int i = 0; i < out_dim(); ++i) {
        Rational v(0);
        for (int j = 0; j < in_dim(); ++j)
            v += rows_[static_cast<size_t>(i)][static_cast<size_t>(j)] * x.at(j + 1);
        out.set(i + 1, v);
    }
    return out;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    size_t m = rows.size(), n = m ? rows[0].size() : 0;
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[row], rows[piv]);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[row][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<FiniteVec> LinearMap::adjoint_solve(const FiniteVec& y) const {
    // Solve L^T w = y for w in R^{out_dim}. L^T is in_dim x out_dim with full
    // row rank, so solutions exist; among them pick minimum support,
    // enumerating support sets by size then lexicographic order.
    int n = in_dim(), m = out_dim();
    if (y.max_support() > n) return std::nullopt;
    std::vector<int> cols(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) cols[static_cast<size_t>(i)] = i;

    std::vector<Rational> rhs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rhs[static_cast<size_t>(i)] = y.at(i + 1);

    auto try_support = [&](const std::vector<int>& support) -> std::optional<FiniteVec> {
        // Least-squares-free exact attempt: solve the n x |support| system if
        // it is square-solvable on a row subset and verify all rows.
        size_t k = support.size();
        if (k > static_cast<size_t>(n)) return std::nullopt;
        // Build full n x k system, reduce: must be consistent with unique sol.
        std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                             std::vector<Rational>(k));
        for (int r = 0; r < n; ++r)
            for (size_t c = 0; c < k; ++c)
                a[static_cast<size_t>(r)][c] =
                    rows_[static_cast<size_t>(support[c])][static_cast<size_t>(r)];
        // Gaussian elimination on the rectangular augmented system.
        std::vector<Rational> b = rhs;
        size_t row = 0;
        std::vector<size_t> pivot_rows;
        for (size_t col = 0; col < k && row < static_cast<size_t>(n); ++col) {
            size_t piv = row;
            while (piv < static_cast<size_t>(n) && a[piv][col] == 0) ++piv;
            if (piv == static_cast<size_t>(n)) return std::nullopt;  // dependent columns
            std::swap(a[row], a[piv]);
            std::swap(b[row], b[piv]);
            for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
                if (i == row || a[i][col] == 0) continue;
                Rational f = a[i][col] / a[row][col];
                for (size_t j = col; j < k; ++j) a[i][j] -= f * a[row][j];
                b[i] -= f * b[row];
            }
            pivot_rows.push_back(row);
            ++row;
        }
        if (pivot_rows.size() < k) return std::nullopt;
        // Consistency: all non-pivot rows must have zero rhs.
        for (size_t i = row; i < static_cast<size_t>(n); ++i)
            if (b[i] != 0) return std::nullopt;
        FiniteVec w;
        for (size_t c = 0; c < k; ++c)
            w.set(support[c] + 1, b[c] / a[c][c]);
        return w;
    };

    // Empty support solves only y = 0.
    if (y.is_zero()) return FiniteVec{};
    for (int size = 1; size <= m; ++size) {
        std::vector<bool> mask(static_cast<size_t>(m), false);
        std::fill(mask.begin(), mask.begin() + size, true);
        // Iterate over all combinations in lexicographic order.
        std::vector<int> support;
        do {
            support.clear();
            for (int i = 0; i < m; ++i)
                if (mask[static_cast<size_t>(i)]) support.push_back(i);
            if (auto w = try_support(support)) return w;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return std::nullopt;
}

GraphSample transport_graph(const LinearMap& L, const GraphSample& g) {
    if (!L.injective())
        throw std::invalid_argument("transport_graph: map must be injective");
    GraphSample out;
    out.alpha = g.alpha;
    out.N = g.N;
    out.generator = "transport(" + g.generator + ")";
    for (const auto& p : g.points) {
        const FiniteVec* x = std::get_if<FiniteVec>(&p.first);
        const FiniteVec* xs = std::get_if<FiniteVec>(&p.second);
        if (!x || !xs)
            throw std::invalid_argument("transport_graph: needs finite graph points");
        if (x->max_support() > L.in_dim())
            throw std::invalid_argument("transport_graph: domain point outside L's input space");
        auto w = L.adjoint_solve(*xs);
        if (!w)
            throw std::runtime_error("transport_graph: adjoint system inconsistent");
        out.points.push_back({AnyVec(L.apply(*x)), AnyVec(*w)});
    }
    return out;
}

}  // namespace monocert
