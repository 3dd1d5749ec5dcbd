#pragma once

#include <string>
#include <vector>

#include "monocert/convex.hpp"
#include "monocert/operators.hpp"
#include "monocert/report.hpp"

namespace monocert {

// Value of a Fitzpatrick-style supremum together with its epistemic status:
// a closed form is exact, a sampled supremum is only a lower bound, and no
// finite sample ever certifies +inf on its own.
struct FitzValue {
    ExtRat value;
    enum class Exactness { ClosedForm, LowerBound } exactness;
    int sample_size = 0;  // for LowerBound

    std::string str() const;
};

// Fitzpatrick function of the skew operator T_alpha in closed form: the
// indicator of C = {(-A x*, x*)}, so 0 exactly when x = -A_alpha x*,
// +inf otherwise.
FitzValue fitz_skew_exact(const AlphaSpec& alpha, const FiniteVec& x, const FiniteVec& xstar);

// Sampled lower bound: max over the graph sample of
// <x, a*> + <a, x*> - <a, a*>.
FitzValue fitz_sampled_lb(const GraphSample& g, const FiniteVec& x, const FiniteVec& xstar);

// Product function handle with an exact conjugate route, for BC testing.
// Either a table-backed f (+) g, or the closed-form Fitzpatrick function of
// T_alpha (whose conjugate is the indicator of {(x*, A* x*)}).
class ProductFn {
  public:
    static ProductFn from_oplus(const OplusFn& f);
    static ProductFn fitz_skew(const AlphaSpec& alpha);

    ExtRat eval(const AnyVec& x, const AnyVec& xstar) const;
    ExtRat conj_eval(const AnyVec& xstar, const AnyVec& xbidual) const;
    std::string name() const;

  private:
    bool is_fitz_ = false;
    AlphaSpec alpha_ = AlphaSpec::ones();
    OplusFn oplus_{ConvexFnTag::sup_norm(), ConvexFnTag::indicator_ball_l1()};
};

// Both BC inequalities, F*(x*, x) >= F(x, x*) >= <x, x*>, checked per point.
CertReport bc_test(const ProductFn& F, const std::vector<GraphPoint>& sample);

// Divergence evidence: scales a sample direction with nonzero bracket until
// the sampled lower bound exceeds the threshold. Returns the scaled sample
// value (> threshold) or nullopt when every bracket vanishes.
std::optional<Rational> fitz_divergence_evidence(const GraphSample& g, const FiniteVec& x,
                                                 const FiniteVec& xstar,
                                                 const Rational& threshold);

}  // namespace monocert
