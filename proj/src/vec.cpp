#include "monocert/vec.hpp"

#include <algorithm>
#include <sstream>

namespace monocert {

// ---------------------------------------------------------------- AlphaSpec

AlphaSpec::AlphaSpec(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (tail_ == 0)
        throw std::invalid_argument("AlphaSpec tail must be nonzero");
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

AlphaSpec AlphaSpec::ones() { return AlphaSpec({}, Rational(1)); }

AlphaSpec AlphaSpec::parse(const std::string& text) {
    if (text == "e" || text == "ones") return ones();
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("alpha spec must be \"e\" or \"prefix;tail\": " + text);
    std::vector<Rational> prefix;
    std::string head = text.substr(0, semi);
    std::stringstream ss(head);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) prefix.push_back(rat_parse(item));
    }
    return AlphaSpec(std::move(prefix), rat_parse(text.substr(semi + 1)));
}

const Rational& AlphaSpec::at(int n) const {
    if (n < 1) throw std::out_of_range("AlphaSpec index must be >= 1");
    if (n <= prefix_len()) return prefix_[static_cast<size_t>(n - 1)];
    return tail_;
}

Rational AlphaSpec::sup_norm() const {
    Rational best = rat_abs(tail_);
    for (const auto& p : prefix_) best = std::max(best, rat_abs(p));
    return best;
}

std::string AlphaSpec::str() const {
    if (prefix_.empty() && tail_ == 1) return "e";
    std::string s;
    for (size_t i = 0; i < prefix_.size(); ++i) {
        if (i) s += ",";
        s += rat_str(prefix_[i]);
    }
    s += ";";
    s += rat_str(tail_);
    return s;
}

// ---------------------------------------------------------------- FiniteVec

FiniteVec::FiniteVec(std::map<int, Rational> entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->first < 1) throw std::invalid_argument("FiniteVec index must be >= 1");
        it = (it->second == 0) ? entries_.erase(it) : std::next(it);
    }
}

FiniteVec FiniteVec::unit(int n) {
    FiniteVec v;
    v.set(n, Rational(1));
    return v;
}

FiniteVec FiniteVec::from_dense(const std::vector<Rational>& dense) {
    FiniteVec v;
    for (size_t i = 0; i < dense.size(); ++i) v.set(static_cast<int>(i + 1), dense[i]);
    return v;
}

Rational FiniteVec::at(int n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Rational(0) : it->second;
}

void FiniteVec::set(int n, const Rational& value) {
    if (n < 1) throw std::invalid_argument("FiniteVec index must be >= 1");
    if (value == 0)
        entries_.erase(n);
    else
        entries_[n] = value;
}

int FiniteVec::max_support() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

FiniteVec FiniteVec::operator+(const FiniteVec& o) const {
    FiniteVec r(*this);
    for (const auto& [n, v] : o.entries_) r.set(n, r.at(n) + v);
    return r;
}

FiniteVec FiniteVec::operator-(const FiniteVec& o) const {
    FiniteVec r(*this);
    for (const auto& [n, v] : o.entries_) r.set(n, r.at(n) - v);
    return r;
}

FiniteVec FiniteVec::operator-() const {
    FiniteVec r;
    for (const auto& [n, v] : entries_) r.set(n, -v);
    return r;
}

FiniteVec operator*(const Rational& c, const FiniteVec& v) {
    FiniteVec r;
    if (c == 0) return r;
    for (const auto& [n, val] : v.entries_) r.set(n, c * val);
    return r;
}

std::string FiniteVec::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [n, v] : entries_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(n) + ":" + rat_str(v);
    }
    return s + "}";
}

// -------------------------------------------------------------- EventualVec

EventualVec::EventualVec(std::vector<Rational> prefix, Rational tail_coeff, AlphaSpec alpha)
    : prefix_(std::move(prefix)), tail_coeff_(std::move(tail_coeff)), alpha_(std::move(alpha)) {
    canonicalize();
}

void EventualVec::canonicalize() {
    while (!prefix_.empty()) {
        int n = static_cast<int>(prefix_.size());
        if (prefix_.back() != tail_coeff_ * alpha_.at(n)) break;
        prefix_.pop_back();
    }
}

EventualVec EventualVec::zero(const AlphaSpec& alpha) {
    return EventualVec({}, Rational(0), alpha);
}

EventualVec EventualVec::from_finite(const FiniteVec& v, const AlphaSpec& alpha) {
    std::vector<Rational> prefix(static_cast<size_t>(v.max_support()), Rational(0));
    for (const auto& [n, val] : v.entries()) prefix[static_cast<size_t>(n - 1)] = val;
    return EventualVec(std::move(prefix), Rational(0), alpha);
}

EventualVec EventualVec::multiple_of_alpha(const Rational& coeff, const AlphaSpec& alpha) {
    return EventualVec({}, coeff, alpha);
}

Rational EventualVec::at(int n) const {
    if (n < 1) throw std::out_of_range("EventualVec index must be >= 1");
    if (n <= prefix_len()) return prefix_[static_cast<size_t>(n - 1)];
    return tail_coeff_ * alpha_.at(n);
}

FiniteVec EventualVec::to_finite() const {
    if (tail_coeff_ != 0)
        throw std::logic_error("to_finite() on a vector with nonzero tail");
    // alpha prefix entries beyond our prefix are multiplied by the zero tail
    // coefficient, so only the explicit prefix carries values.
    return FiniteVec::from_dense(prefix_);
}

EventualVec EventualVec::operator+(const EventualVec& o) const {
    if (!(alpha_ == o.alpha_))
        throw std::invalid_argument("EventualVec arithmetic requires matching alpha");
    int len = std::max({prefix_len(), o.prefix_len(), 0});
    std::vector<Rational> prefix;
    prefix.reserve(static_cast<size_t>(len));
    for (int n = 1; n <= len; ++n) prefix.push_back(at(n) + o.at(n));
    return EventualVec(std::move(prefix), tail_coeff_ + o.tail_coeff_, alpha_);
}

EventualVec EventualVec::operator-(const EventualVec& o) const { return *this + (-o); }

EventualVec EventualVec::operator-() const {
    std::vector<Rational> prefix;
    prefix.reserve(prefix_.size());
    for (const auto& p : prefix_) prefix.push_back(-p);
    return EventualVec(std::move(prefix), -tail_coeff_, alpha_);
}

EventualVec operator*(const Rational& c, const EventualVec& v) {
    std::vector<Rational> prefix;
    prefix.reserve(v.prefix_.size());
    for (const auto& p : v.prefix_) prefix.push_back(c * p);
    return EventualVec(std::move(prefix), c * v.tail_coeff_, v.alpha_);
}

EventualVec EventualVec::add_finite(const FiniteVec& v) const {
    return *this + EventualVec::from_finite(v, alpha_);
}

bool EventualVec::operator==(const EventualVec& o) const {
    if (tail_coeff_ == 0 && o.tail_coeff_ == 0)
        return to_finite() == o.to_finite();  // alpha is immaterial then
    if (!(alpha_ == o.alpha_)) return false;
    return prefix_ == o.prefix_ && tail_coeff_ == o.tail_coeff_;
}

std::string EventualVec::str() const {
    std::string s = "{prefix:[";
    for (size_t i = 0; i < prefix_.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(prefix_[i]);
    }
    s += "], tail:\"";
    s += rat_str(tail_coeff_);
    s += "\", alpha:";
    s += alpha_.str();
    s += "}";
    return s;
}

// ------------------------------------------------------------------ pairing

Rational pair(const FiniteVec& x, const FiniteVec& y) {
    // Iterate over the sparser side.
    const FiniteVec& a = x.entries().size() <= y.entries().size() ? x : y;
    const FiniteVec& b = &a == &x ? y : x;
    Rational sum(0);
    for (const auto& [n, v] : a.entries()) sum += v * b.at(n);
    return sum;
}

Rational pair(const FiniteVec& x, const EventualVec& y) {
    Rational sum(0);
    for (const auto& [n, v] : x.entries()) sum += v * y.at(n);
    return sum;
}

Rational pair(const EventualVec& x, const FiniteVec& y) { return pair(y, x); }

Rational pair(const AnyVec& x, const AnyVec& y) {
    if (std::holds_alternative<EventualVec>(x) && std::holds_alternative<EventualVec>(y))
        throw std::invalid_argument("pairing of two eventual vectors rejected (series may diverge)");
    return std::visit(
        [](const auto& a, const auto& b) -> Rational {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, EventualVec> &&
                          std::is_same_v<std::decay_t<decltype(b)>, EventualVec>) {
                throw std::invalid_argument("unreachable");
            } else {
                return pair(a, b);
            }
        },
        x, y);
}

// -------------------------------------------------------------------- norms

Rational norm_l1(const FiniteVec& x) {
    Rational sum(0);
    for (const auto& [n, v] : x.entries()) sum += rat_abs(v);
    return sum;
}

Rational norm_sup(const FiniteVec& x) {
    Rational best(0);
    for (const auto& [n, v] : x.entries()) best = std::max(best, rat_abs(v));
    return best;
}

Rational norm_sup(const EventualVec& x) {
    Rational best(0);
    for (const auto& p : x.prefix()) best = std::max(best, rat_abs(p));
    // Tail values |tail_coeff * alpha_n| for n > prefix_len: alpha takes its
    // remaining prefix values and then its constant tail.
    const AlphaSpec& a = x.alpha();
    for (int n = x.prefix_len() + 1; n <= a.prefix_len(); ++n)
        best = std::max(best, rat_abs(x.tail_coeff() * a.at(n)));
    best = std::max(best, rat_abs(x.tail_coeff() * a.tail()));
    return best;
}

Rational norm_sup(const AnyVec& x) {
    return std::visit([](const auto& v) { return norm_sup(v); }, x);
}

// ------------------------------------------------------------- kernel basis

std::vector<FiniteVec> kernel_basis(const AlphaSpec& alpha, int N) {
    if (N < 2) throw std::invalid_argument("kernel_basis needs N >= 2");
    std::vector<int> nonzero;
    std::vector<FiniteVec> basis;
    for (int k = 1; k <= N; ++k) {
        if (alpha.at(k) == 0)
            basis.push_back(FiniteVec::unit(k));
        else
            nonzero.push_back(k);
    }
    if (nonzero.empty())
        throw std::invalid_argument("alpha vanishes on [1..N]; kernel is everything");
    for (size_t j = 0; j + 1 < nonzero.size(); ++j) {
        int k = nonzero[j], m = nonzero[j + 1];
        FiniteVec v;
        v.set(k, alpha.at(m));
        v.set(m, -alpha.at(k));
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [](const FiniteVec& a, const FiniteVec& b) {
        return a.entries().begin()->first < b.entries().begin()->first;
    });
    return basis;
}

std::string vec_str(const AnyVec& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace monocert
