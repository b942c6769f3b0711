#pragma once

// Reduced K3 BPS counts r_{g,h} (Yau-Zaslow, the genus-1 relation, the
// two-variable product formula) and the multiple-cover transform between
// Gromov-Witten and BPS invariants of the 3-fold.

#include <nlk3/rational.hpp>

#include <map>
#include <utility>
#include <vector>

namespace nlk3 {

class RTable {
public:
    RTable(int gmax, int hmax);

    int gmax() const { return gmax_; }
    int hmax() const { return hmax_; }
    const Int& r(int g, int h) const;
    void set(int g, int h, Int v);

private:
    int gmax_, hmax_;
    std::vector<std::vector<Int>> v_;
};

// genus 0 row: sum_h r_{0,h} q^h = prod (1-q^n)^{-24}
std::vector<Int> yau_zaslow(int hmax);

// r_{1,h} = -(h/12) r_{0,h}; throws if the division is not exact
Int genus1(int h);
Int genus1(int h, const Int& r0h);

// full table from the two-variable product
// prod_n (1-q^n)^{-20} (1-yq^n)^{-2} (1-y^{-1}q^n)^{-2},
// written in the basis (-1)^g (y^{1/2}-y^{-1/2})^{2g}
RTable kkv_table(int gmax, int hmax);

using GWTable = std::map<std::pair<int, int>, Rat>;

struct BPSTable {
    std::map<std::pair<int, int>, Rat> values;            // (g,d) -> n_{g,d}
    std::vector<std::pair<int, int>> non_integral;        // integrality warnings
};

// coefficient of lambda^{2g-2} in (1/k)(sin(k lambda/2)/(lambda/2))^{2g'-2},
// normalized against the lambda^{2g'-2} prefactor; zero for g < g'
Rat gv_coefficient(int gprime, int g, int k);

GWTable gv_transform(const BPSTable& bps, int gmax, int dmax);
BPSTable gv_invert(const GWTable& gw, int gmax, int dmax);

}  // namespace nlk3
