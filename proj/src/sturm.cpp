#include "zerogeom/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace zerogeom {

namespace {

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

SturmChain SturmChain::build(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
    SturmChain sc;
    Poly p0 = square_free_part(p);
    if (p0.degree() == 0) {
        sc.chain_ = {std::move(p0)};
        return sc;
    }
    sc.chain_.push_back(p0);
    sc.chain_.push_back(p0.derivative());
    while (true) {
        const Poly& a = sc.chain_[sc.chain_.size() - 2];
        const Poly& b = sc.chain_.back();
        Poly r = -divrem(a, b).second;
        if (r.is_zero()) break;
        sc.chain_.push_back(r.scaled(BigRational(1) / abs(r.leading())));
    }
    return sc;
}

int SturmChain::variations_at(const BigRational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sgn(q.eval(x)));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        const int lead = sgn(q.leading());
        signs.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

unsigned SturmChain::count_roots(const std::optional<BigRational>& lo,
                                 const std::optional<BigRational>& hi) const {
    if (lo && hi && !(*lo < *hi)) throw std::domain_error("empty interval for root count");
    const int vlo = lo ? variations_at(*lo) : variations_at_neg_inf();
    const int vhi = hi ? variations_at(*hi) : variations_at_pos_inf();
    return static_cast<unsigned>(vlo - vhi);
}

unsigned count_real_roots(const Poly& p, const std::optional<BigRational>& lo,
                          const std::optional<BigRational>& hi) {
    return SturmChain::build(p).count_roots(lo, hi);
}

std::vector<IsolationInterval> isolate_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_roots of zero polynomial");
    if (p.degree() == 0) return {};

    const std::vector<Poly> factors = yun_squarefree_factors(p);
    std::vector<std::optional<SturmChain>> factor_chains(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].degree() >= 1) factor_chains[i] = SturmChain::build(factors[i]);

    Poly sqfree = Poly::constant(1);
    for (const auto& f : factors) sqfree = sqfree * f;
    if (sqfree.degree() == 0) return {};
    const SturmChain chain = SturmChain::build(sqfree);

    const BigRational bound = cauchy_root_bound(sqfree);
    struct Segment {
        BigRational lo, hi;
        unsigned count;
    };
    std::vector<Segment> stack;
    const unsigned total = chain.count_roots(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});

    std::vector<IsolationInterval> result;
    while (!stack.empty()) {
        Segment seg = std::move(stack.back());
        stack.pop_back();
        if (seg.count == 1) {
            unsigned multiplicity = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (!factor_chains[i]) continue;
                if (factor_chains[i]->count_roots(seg.lo, seg.hi) == 1) {
                    multiplicity = static_cast<unsigned>(i + 1);
                    break;
                }
            }
            result.push_back({std::move(seg.lo), std::move(seg.hi), multiplicity});
            continue;
        }
        const BigRational mid = (seg.lo + seg.hi) / 2;
        const unsigned left = chain.count_roots(seg.lo, mid);
        if (left > 0) stack.push_back({seg.lo, mid, left});
        if (seg.count > left) stack.push_back({mid, seg.hi, seg.count - left});
    }

    std::sort(result.begin(), result.end(),
              [](const IsolationInterval& a, const IsolationInterval& b) { return a.lo < b.lo; });
    return result;
}

IsolationInterval refine_interval(const SturmChain& sqfree_chain, IsolationInterval iv,
                                  const BigRational& width) {
    while (iv.hi - iv.lo > width) {
        const BigRational mid = (iv.lo + iv.hi) / 2;
        if (sqfree_chain.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

}  // namespace zerogeom
