#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocert/rational.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// The operator family on l^1 built from a bounded multiplier sequence alpha:
//   (A x*)_n = alpha_n^2 x*_n + 2 sum_{i>n} alpha_n alpha_i x*_i,
// with symmetric part P x* = <alpha, x*> alpha and skew part S = A - P,
//   (S x*)_n = sum_{i>n} alpha_n alpha_i x*_i - sum_{i<n} alpha_n alpha_i x*_i.
// A satisfies <A x*, x*> = <alpha, x*>^2 exactly. Images of finite-support
// functionals vanish beyond the support, so the range lies in c0
// automatically; a multiplier violating that is not expressible here.

FiniteVec apply_A_alpha(const AlphaSpec& alpha, const FiniteVec& xstar);
EventualVec apply_P_alpha(const AlphaSpec& alpha, const FiniteVec& xstar);
EventualVec apply_S_alpha(const AlphaSpec& alpha, const FiniteVec& xstar);

// Gossez's skew operator (G x*)_n = sum_{i>n} x*_i - sum_{i<n} x*_i;
// coincides with S_alpha at alpha = (1,1,1,...).
EventualVec apply_G(const FiniteVec& xstar);

// Restriction of the adjoint to l^1: A* x* = P x* - S x*. Its tail
// coefficient is 2<alpha, x*>.
EventualVec adjoint_A_alpha(const AlphaSpec& alpha, const FiniteVec& xstar);

// ----------------------------------------------------------- graph samples

struct GraphPoint {
    AnyVec first;    // domain-side element (bidual side for adjoint graphs)
    AnyVec second;   // functional-side element
};

// Finite spanning sample of an operator graph, carrying enough generator
// metadata to rebuild it from a serialized report.
struct GraphSample {
    std::vector<GraphPoint> points;
    std::string generator;  // e.g. "T_alpha(alpha=e, N=3, pairwise)"
    AlphaSpec alpha = AlphaSpec::ones();
    int N = 0;

    GraphSample scaled(const Rational& t) const;
};

// gra T_alpha truncated: points (-A v, v) for v over kernel_basis(alpha, N),
// plus all pairwise sums when requested. Every point is re-verified against
// the defining formula on construction.
GraphSample graph_T_alpha(const AlphaSpec& alpha, int N, bool pairwise_sums = true);

// gra T* truncated: points (S x* + r alpha, x*) for x* in {0, e_1..e_N} and
// r over r_values. First components live on the bidual side.
GraphSample graph_T_star(const AlphaSpec& alpha, int N,
                         const std::vector<Rational>& r_values);

// -------------------------------------------------- subdifferential oracles

// Description of the subdifferential of ||.||_inf at x, with an exact
// membership test and its extreme points on attaining coordinates.
struct SupNormSubdiff {
    bool at_zero;
    Rational norm_value;
    std::vector<int> attaining;  // coordinates with |x_n| = ||x||_inf (x != 0)

    // x != 0: x* is a subgradient iff ||x*||_1 = 1 and <x, x*> = ||x||_inf
    // (support and sign conditions on attaining coordinates follow).
    // x  = 0: membership iff ||x*||_1 <= 1.
    bool contains(const FiniteVec& xstar) const;

    // Signed coordinate functionals sign(x_m) e_m on attaining coordinates;
    // at x = 0, the vertices +-e_k for k <= up_to.
    std::vector<FiniteVec> vertices(int up_to = 1) const;

  private:
    friend SupNormSubdiff subdiff_supnorm(const FiniteVec&);
    FiniteVec x_;
};

SupNormSubdiff subdiff_supnorm(const FiniteVec& x);

// Duality map of 1/2 ||.||_inf^2: J(x) = ||x||_inf * subdiff ||.||_inf(x),
// and J(0) = {0}.
struct DualityMapSet {
    Rational norm_value;
    bool contains(const FiniteVec& xstar) const;

  private:
    friend DualityMapSet duality_map_halfsq(const FiniteVec&);
    FiniteVec x_;
};

DualityMapSet duality_map_halfsq(const FiniteVec& x);

// Tag for the convex perturbation used in T + subdifferential graphs.
struct SubdiffTag {
    enum class Kind { SupNorm, ScaledHalfSupNormSq } kind;
    Rational lambda = Rational(1);  // for ScaledHalfSupNormSq
};

// Points (x, x* + s*) with (x, x*) from graph_T_alpha and s* a vertex of the
// subdifferential of the tagged function at x.
GraphSample graph_T_plus_subdiff(const AlphaSpec& alpha, int N, const SubdiffTag& f);

// ------------------------------------------- dual-side (predual) operator

// Basis-coefficient sequence of the second component of the dual-side skew
// operator graph: coefficient_n = sum_{i>n} y*_i - sum_{i<n} y*_i, with tail
// coefficient -<e, y*> relative to alpha = (1,1,...).
EventualVec dual_gossez_coeffs(const FiniteVec& ystar_coeffs, int N);

// The telescoped quantity the skewness computation reduces to:
//   sum_{n<=k} (R_n + R_{n+1}) y*_n  with  R_n = sum_{i>=n} y*_i,
// which equals s^2 - R_{k+1}^2, hence exactly s^2 = <e,y*>^2 once k covers
// the support. The raw coordinate pairing of dual_gossez_coeffs against y*
// equals s^2 - s*sigma_k = 0 for such k, confirming skewness for every y*.
Rational dual_gossez_telescope(const FiniteVec& ystar_coeffs, int k);

// Rank-one perturbed operator: coefficients of (A + <.,e>e) y*,
//   c_k = 2 sum_{i>k} y*_i + y*_k,
// whose tail coefficient always vanishes (the range stays inside the
// codimension-one subspace spanned by the basis).
EventualVec dual_gossez_plus_rank1(const FiniteVec& ystar_coeffs, int N);

// ------------------------------------------------------ operator transport

// Dense rational matrix L viewed as an injective map into a larger space:
// a monotone graph {(y, y*)} transports to {(L y, w*)} with L^T w* = y*.
class LinearMap {
  public:
    // With the injective flag set, column independence is verified by exact
    // rank on construction.
    LinearMap(std::vector<std::vector<Rational>> rows, bool require_injective = true);

    static LinearMap identity(int n);
    static LinearMap scaling(int n, const Rational& c);

    int out_dim() const { return static_cast<int>(rows_.size()); }
    int in_dim() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    bool injective() const { return injective_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    FiniteVec apply(const FiniteVec& x) const;
    // Exact solution of L^T w = y with minimum support (ties broken by
    // lexicographically first support set); nullopt when inconsistent.
    std::optional<FiniteVec> adjoint_solve(const FiniteVec& y) const;

  private:
    std::vector<std::vector<Rational>> rows_;
    bool injective_ = false;
};

// Exact column rank via fraction-free elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows);

GraphSample transport_graph(const LinearMap& L, const GraphSample& g);

}  // namespace monocert
