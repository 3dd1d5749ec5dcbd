#include "monocert/james.hpp"

#include <algorithm>
#include <stdexcept>

#include "monocert/simplex.hpp"

namespace monocert {

namespace {

Rational sq(const Rational& q) { return q * q; }

std::vector<Rational> dense_with_zero(const FiniteVec& x, int N) {
    if (x.max_support() > N)
        throw std::invalid_argument("james_norm_sq: support exceeds N");
    std::vector<Rational> v(static_cast<size_t>(N) + 1, Rational(0));
    for (const auto& [n, val] : x.entries()) v[static_cast<size_t>(n - 1)] = val;
    return v;  // v[N] is the appended zero at index N+1
}

}  // namespace

JamesChain james_norm_sq_chain(const FiniteVec& x, int N) {
    std::vector<Rational> v = dense_with_zero(x, N);
    size_t len = v.size();
    // best[j]: max chain value over chains ending at j (0 = chain of length 1).
    std::vector<Rational> best(len, Rational(0));
    std::vector<size_t> from(len, len);  // predecessor, len = none
    Rational top(0);
    size_t top_j = len;
    for (size_t j = 0; j < len; ++j) {
        for (size_t i = 0; i < j; ++i) {
            Rational cand = best[i] + sq(v[i] - v[j]);
            if (cand > best[j]) {
                best[j] = cand;
                from[j] = i;
            }
        }
        if (best[j] > top) {
            top = best[j];
            top_j = j;
        }
    }
    JamesChain out{top, {}};
    for (size_t j = top_j; j != len; j = from[j]) out.chain.push_back(static_cast<int>(j + 1));
    std::reverse(out.chain.begin(), out.chain.end());
    return out;
}

Rational james_norm_sq(const FiniteVec& x, int N) {
    return james_norm_sq_chain(x, N).value_sq;
}

Rational james_norm_sq_enum(const FiniteVec& x, int N) {
    std::vector<Rational> v = dense_with_zero(x, N);
    size_t len = v.size();
    if (len > 20) throw std::invalid_argument("james_norm_sq_enum: N too large");
    Rational best(0);
    // Each subset bitmask with >= 2 elements is an increasing chain.
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
        if (__builtin_popcountl(mask) < 2) continue;
        Rational sum(0);
        int prev = -1;
        for (size_t j = 0; j < len; ++j) {
            if (!(mask & (1ul << j))) continue;
            if (prev >= 0) sum += sq(v[static_cast<size_t>(prev)] - v[j]);
            prev = static_cast<int>(j);
        }
        if (sum > best) best = sum;
    }
    return best;
}

JamesDualBracket james_dual_norm(const FiniteVec& f, const Rational& tol,
                                 int max_iterations) {
    if (tol <= 0) throw std::invalid_argument("james_dual_norm: tol must be > 0");
    int M = std::max(f.max_support(), 1);
    size_t dim = static_cast<size_t>(M);

    std::vector<Rational> obj(dim, Rational(0));
    for (const auto& [n, val] : f.entries()) obj[static_cast<size_t>(n - 1)] = val;

    // Box |x_i| <= 1 is valid: the chain (i, N+1) forces x_i^2 <= 1.
    std::vector<std::vector<Rational>> G;
    std::vector<Rational> h;
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Rational> row(dim, Rational(0));
        row[i] = 1;
        G.push_back(row);
        h.push_back(Rational(1));
        row[i] = -1;
        G.push_back(std::move(row));
        h.push_back(Rational(1));
    }

    // Exact LP vertices accumulate huge numerators; reported brackets are
    // rounded outward onto a tol/8 grid, which keeps both bounds certified.
    Rational grid_unit = tol / 8;
    auto round_out = [&](const Rational& lo_v,
                         const Rational& hi_v) -> std::pair<Rational, Rational> {
        Rational lo_ratio = lo_v / grid_unit, hi_ratio = hi_v / grid_unit;
        mpz_class lo_steps, hi_steps;
        mpz_fdiv_q(lo_steps.get_mpz_t(), lo_ratio.get_num_mpz_t(), lo_ratio.get_den_mpz_t());
        mpz_cdiv_q(hi_steps.get_mpz_t(), hi_ratio.get_num_mpz_t(), hi_ratio.get_den_mpz_t());
        Rational rlo = Rational(lo_steps) * grid_unit;
        Rational rhi = Rational(hi_steps) * grid_unit;
        return {rlo, rhi};
    };

    Rational lo(0), hi(0);
    bool have_hi = false;
    for (int it = 1; it <= max_iterations; ++it) {
        LpIneqResult r = lp_maximize_ineq(obj, G, h);
        if (r.status != LpResult::Status::Optimal)
            throw std::runtime_error("james_dual_norm: relaxation LP failed");
        hi = r.objective;
        have_hi = true;

        FiniteVec xhat;
        for (size_t i = 0; i < dim; ++i) xhat.set(static_cast<int>(i + 1), r.x[i]);
        JamesChain jc = james_norm_sq_chain(xhat, M);

        if (jc.value_sq <= 1) {
            // LP maximizer is feasible for the true body: bracket closes.
            return {hi, hi, true, it};
        }
        // Scale back into the ball for a certified lower bound.
        Rational scale = rat_sqrt_upper(jc.value_sq);
        FiniteVec xfeas = (Rational(1) / scale) * xhat;
        Rational feas_val(0);
        for (const auto& [n, val] : xfeas.entries()) feas_val += val * f.at(n);
        if (feas_val > lo) lo = feas_val;
        if (hi - lo <= 3 * tol / 4) {
            auto [rlo, rhi] = round_out(lo, hi);
            return {rlo, rhi, true, it};
        }

        // Violated chain quadratic Q(x) = sum (x_{c_k} - x_{c_{k+1}})^2 <= 1,
        // linearized at the feasible point: grad.x <= 1 + grad.xfeas - Q(xfeas).
        std::vector<Rational> grad(dim, Rational(0));
        Rational q_at(0);
        for (size_t k = 0; k + 1 < jc.chain.size(); ++k) {
            int a = jc.chain[k], b = jc.chain[k + 1];
            Rational va = xfeas.at(a);
            Rational vb = (b == M + 1) ? Rational(0) : xfeas.at(b);
            Rational d = va - vb;
            q_at += d * d;
            grad[static_cast<size_t>(a - 1)] += 2 * d;
            if (b != M + 1) grad[static_cast<size_t>(b - 1)] -= 2 * d;
        }
        Rational rhs = Rational(1) - q_at;
        for (size_t i = 0; i < dim; ++i) rhs += grad[i] * xfeas.at(static_cast<int>(i + 1));
        G.push_back(std::move(grad));
        h.push_back(std::move(rhs));
    }
    return {lo, have_hi ? hi : lo, false, max_iterations};
}

Rational james_dual_grid_opt(const FiniteVec& f, const Rational& step) {
    if (step <= 0) throw std::invalid_argument("grid step must be > 0");
    int M = std::max(f.max_support(), 1);
    std::vector<Rational> levels;
    for (Rational t(-1); t <= 1; t += step) levels.push_back(t);
    std::vector<size_t> idx(static_cast<size_t>(M), 0);
    Rational best(0);
    while (true) {
        FiniteVec x;
        for (int i = 0; i < M; ++i) x.set(i + 1, levels[idx[static_cast<size_t>(i)]]);
        if (james_norm_sq(x, M) <= 1) {
            Rational val(0);
            for (const auto& [n, v] : f.entries()) val += v * x.at(n);
            if (val > best) best = val;
        }
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == levels.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return best;
}

}  // namespace monocert
