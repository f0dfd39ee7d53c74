#pragma once

#include <optional>
#include <vector>

#include "zerogeom/poly.hpp"

namespace zerogeom {

// Sturm chain of the square-free part of a polynomial. Sign variations V(x)
// are counted with zeros dropped, which makes V right-continuous, so
// V(a) - V(b) is exactly the number of distinct real roots in (a, b] even
// when a or b is itself a root. No endpoint perturbation is needed.
class SturmChain {
public:
    // Requires p != 0. The chain is built on square_free_part(p); each
    // negated remainder is rescaled by a positive rational to curb
    // coefficient growth (positive scaling preserves all sign data).
    static SturmChain build(const Poly& p);

    int variations_at(const BigRational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // Distinct real roots in (lo, hi]; std::nullopt means -/+infinity.
    unsigned count_roots(const std::optional<BigRational>& lo,
                         const std::optional<BigRational>& hi) const;

    const std::vector<Poly>& chain() const { return chain_; }

private:
    std::vector<Poly> chain_;
};

// Distinct real roots of p in (lo, hi]; std::nullopt endpoints mean the
// interval is unbounded on that side. Requires p != 0 and lo < hi.
unsigned count_real_roots(const Poly& p, const std::optional<BigRational>& lo,
                          const std::optional<BigRational>& hi);

// Half-open interval (lo, hi] containing exactly one distinct real root,
// whose multiplicity in the original polynomial is `multiplicity`.
struct IsolationInterval {
    BigRational lo;
    BigRational hi;
    unsigned multiplicity;
};

// Disjoint sorted intervals isolating every distinct real root of p, with
// multiplicities read off the square-free decomposition. Requires p != 0.
std::vector<IsolationInterval> isolate_roots(const Poly& p);

// Shrinks an isolating interval of `sqfree` (square-free, exactly one root in
// (iv.lo, iv.hi]) by bisection until hi - lo <= width.
IsolationInterval refine_interval(const SturmChain& sqfree_chain, IsolationInterval iv,
                                  const BigRational& width);

}  // namespace zerogeom
