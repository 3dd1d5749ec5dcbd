#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "monocert/rational.hpp"

namespace monocert {

// Bounded multiplier sequence: rational prefix, then a constant nonzero tail.
// alpha_n = prefix[n-1] for n <= len(prefix), alpha_n = tail otherwise.
// The nonzero tail is the finitely-describable stand-in for "limsup != 0";
// see the README note on what that does and does not certify.
class AlphaSpec {
  public:
    AlphaSpec(std::vector<Rational> prefix, Rational tail);

    static AlphaSpec ones();  // the constant sequence e = (1,1,1,...)
    // Accepts "e" / "ones", or "a1,a2,...;t" (prefix before ';', tail after).
    static AlphaSpec parse(const std::string& text);

    const Rational& at(int n) const;  // 1-based
    const std::vector<Rational>& prefix() const { return prefix_; }
    const Rational& tail() const { return tail_; }
    int prefix_len() const { return static_cast<int>(prefix_.size()); }

    // sup_n |alpha_n| (exact: finitely many distinct values).
    Rational sup_norm() const;

    bool operator==(const AlphaSpec& o) const = default;
    std::string str() const;

  private:
    std::vector<Rational> prefix_;  // canonical: last entry differs from tail
    Rational tail_;                 // != 0
};

// Finitely supported sequence with exact rational entries. Indices are
// 1-based; zero entries are never stored.
class FiniteVec {
  public:
    FiniteVec() = default;
    explicit FiniteVec(std::map<int, Rational> entries);

    static FiniteVec unit(int n);                       // e_n
    static FiniteVec from_dense(const std::vector<Rational>& v);  // v[0] is index 1

    Rational at(int n) const;
    void set(int n, const Rational& value);
    bool is_zero() const { return entries_.empty(); }
    int max_support() const;  // 0 for the zero vector
    const std::map<int, Rational>& entries() const { return entries_; }

    FiniteVec operator+(const FiniteVec& o) const;
    FiniteVec operator-(const FiniteVec& o) const;
    FiniteVec operator-() const;
    friend FiniteVec operator*(const Rational& c, const FiniteVec& v);
    bool operator==(const FiniteVec& o) const = default;

    std::string str() const;  // "{1:1, 3:-2/3}"

  private:
    std::map<int, Rational> entries_;
};

// Sequence that is eventually a constant multiple of an AlphaSpec:
// x_n = prefix[n-1] for n <= L, x_n = tail_coeff * alpha_n for n > L.
// Canonical form keeps L minimal. Every infinite-support object arising in
// the constructions here (P x*, S x*, A* x*, the Gossez images, the bidual
// witnesses) has exactly this shape.
class EventualVec {
  public:
    EventualVec(std::vector<Rational> prefix, Rational tail_coeff, AlphaSpec alpha);

    static EventualVec zero(const AlphaSpec& alpha);
    static EventualVec from_finite(const FiniteVec& v, const AlphaSpec& alpha);
    // tail_coeff * alpha as a sequence, e.g. alpha itself with coeff 1.
    static EventualVec multiple_of_alpha(const Rational& coeff, const AlphaSpec& alpha);

    Rational at(int n) const;
    const std::vector<Rational>& prefix() const { return prefix_; }
    const Rational& tail_coeff() const { return tail_coeff_; }
    const AlphaSpec& alpha() const { return alpha_; }
    int prefix_len() const { return static_cast<int>(prefix_.size()); }

    bool has_zero_tail() const { return tail_coeff_ == 0; }
    // Valid only when the tail coefficient is zero.
    FiniteVec to_finite() const;

    EventualVec operator+(const EventualVec& o) const;  // requires same alpha
    EventualVec operator-(const EventualVec& o) const;
    EventualVec operator-() const;
    friend EventualVec operator*(const Rational& c, const EventualVec& v);
    EventualVec add_finite(const FiniteVec& v) const;

    bool operator==(const EventualVec& o) const;

    std::string str() const;  // "(1, 2 | tail 2*alpha)"

  private:
    void canonicalize();

    std::vector<Rational> prefix_;
    Rational tail_coeff_;
    AlphaSpec alpha_;
};

using AnyVec = std::variant<FiniteVec, EventualVec>;

// <x, y> = sum x_n y_n. At least one side must be finitely supported; the
// pairing of two EventualVec is rejected (the series need not converge).
Rational pair(const FiniteVec& x, const FiniteVec& y);
Rational pair(const FiniteVec& x, const EventualVec& y);
Rational pair(const EventualVec& x, const FiniteVec& y);
Rational pair(const AnyVec& x, const AnyVec& y);

Rational norm_l1(const FiniteVec& x);
Rational norm_sup(const FiniteVec& x);
Rational norm_sup(const EventualVec& x);
Rational norm_sup(const AnyVec& x);

// Basis of {x* : supp(x*) in [1..N], <alpha, x*> = 0}: N-1 independent
// vectors. Where alpha_k and alpha_{k+1} are both nonzero the vector is
// alpha_{k+1} e_k - alpha_k e_{k+1}; a coordinate with alpha_k = 0
// contributes e_k itself, and adjacent-difference vectors are then formed
// between consecutive nonzero positions (left-to-right, deterministic).
std::vector<FiniteVec> kernel_basis(const AlphaSpec& alpha, int N);

std::string vec_str(const AnyVec& v);

}  // namespace monocert
