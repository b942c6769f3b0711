#include <nlk3/bpsk3.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace nlk3 {

RTable::RTable(int gmax, int hmax) : gmax_(gmax), hmax_(hmax) {
    if (gmax < 0 || hmax < 0 || gmax > hmax)
        throw std::invalid_argument("RTable: need 0 <= gmax <= hmax");
    v_.assign(gmax + 1, std::vector<Int>(hmax + 1, Int(0)));
}

const Int& RTable::r(int g, int h) const {
    if (g < 0 || g > gmax_ || h < 0 || h > hmax_)
        throw std::out_of_range("RTable::r: (g,h) outside computed range");
    return v_[g][h];
}

void RTable::set(int g, int h, Int v) { v_.at(g).at(h) = std::move(v); }

std::vector<Int> yau_zaslow(int hmax) {
    // prod_n (1-q^n)^{-24}; each factor is sum_k C(k+23,23) q^{nk}
    std::vector<Int> c(hmax + 1, Int(0));
    c[0] = 1;
    for (int n = 1; n <= hmax; ++n) {
        std::vector<Int> next(hmax + 1, Int(0));
        for (int h = 0; h <= hmax; ++h) {
            if (c[h] == 0) continue;
            for (int k = 0; h + n * k <= hmax; ++k) next[h + n * k] += c[h] * binomial(Int(k + 23), 23);
        }
        c = std::move(next);
    }
    return c;
}

Int genus1(int h, const Int& r0h) {
    if (h < 0) throw std::invalid_argument("genus1: h >= 0");
    Int num = -Int(h) * r0h;
    if (num % 12 != 0) throw std::runtime_error("genus1: non-integral value (bug)");
    return num / 12;
}

Int genus1(int h) { return genus1(h, yau_zaslow(h)[h]); }

namespace {

using YPoly = std::map<int, Int>;  // Laurent polynomial in y

// multiply the q-series-with-YPoly-coefficients by (1 - y^{ydeg} q^n)^{-2}
void mul_double_pole(std::vector<YPoly>& c, int n, int ydeg) {
    int hmax = static_cast<int>(c.size()) - 1;
    std::vector<YPoly> next(c.size());
    for (int h = 0; h <= hmax; ++h) {
        if (c[h].empty()) continue;
        for (int k = 0; h + n * k <= hmax; ++k)
            for (const auto& [yd, v] : c[h]) next[h + n * k][yd + k * ydeg] += v * (k + 1);
    }
    c = std::move(next);
}

void mul_eta_pole(std::vector<YPoly>& c, int n) {  // (1 - q^n)^{-20}
    int hmax = static_cast<int>(c.size()) - 1;
    std::vector<YPoly> next(c.size());
    for (int h = 0; h <= hmax; ++h) {
        if (c[h].empty()) continue;
        for (int k = 0; h + n * k <= hmax; ++k) {
            Int w = binomial(Int(k + 19), 19);
            for (const auto& [yd, v] : c[h]) next[h + n * k][yd] += v * w;
        }
    }
    c = std::move(next);
}

void prune(YPoly& p) {
    for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
}

}  // namespace

RTable kkv_table(int gmax, int hmax) {
    std::vector<YPoly> c(hmax + 1);
    c[0][0] = 1;
    for (int n = 1; n <= hmax; ++n) {
        mul_eta_pole(c, n);
        mul_double_pole(c, n, 1);
        mul_double_pole(c, n, -1);
    }
    RTable out(gmax, hmax);
    // rewrite each q^h coefficient in the basis z^g, z = y - 2 + y^{-1}:
    // the change of basis is triangular with leading coefficient 1
    for (int h = 0; h <= hmax; ++h) {
        YPoly p = c[h];
        prune(p);
        while (!p.empty()) {
            int top = std::max(std::abs(p.begin()->first), std::abs(p.rbegin()->first));
            auto hi = p.find(top), lo = p.find(-top);
            if (top > 0 && (hi == p.end() || lo == p.end() || hi->second != lo->second))
                throw std::runtime_error("kkv_table: asymmetric y-polynomial (bug)");
            Int a = (hi != p.end()) ? hi->second : Int(0);
            YPoly z{{0, Int(1)}};
            for (int i = 0; i < top; ++i) {
                YPoly nz;
                for (const auto& [d, v] : z) {
                    nz[d + 1] += v;
                    nz[d] += -2 * v;
                    nz[d - 1] += v;
                }
                z = std::move(nz);
            }
            for (const auto& [d, v] : z) p[d] -= a * v;
            prune(p);
            if (top > h) throw std::runtime_error("kkv_table: nonzero value with g > h (bug)");
            // r_{g,h} with g = top; the basis element carries the sign (-1)^g
            if (top <= gmax) out.set(top, h, (top % 2 == 0) ? a : -a);
        }
    }
    return out;
}

namespace {

// series in lambda^2 with rational coefficients, truncated at length terms
using L2Series = std::vector<Rat>;

L2Series sin_ratio(int k, int len) {
    // sin(k lam/2)/(lam/2) = k sum_j (-1)^j (k^2/4)^j lam^{2j} / (2j+1)!
    L2Series s(len, Rat(0));
    Rat k2over4 = make_rat(static_cast<std::int64_t>(k) * k, 4);
    Rat pw(1);
    for (int j = 0; j < len; ++j) {
        Rat c = Rat(k) * pw / Rat(factorial(2 * j + 1));
        s[j] = (j % 2 == 0) ? c : -c;
        pw *= k2over4;
    }
    return s;
}

L2Series mul(const L2Series& a, const L2Series& b) {
    L2Series r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

L2Series invert(const L2Series& a) {
    L2Series r(a.size(), Rat(0));
    r[0] = 1 / a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rat acc(0);
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
        r[i] = -acc / a[0];
    }
    return r;
}

L2Series power(const L2Series& a, int e) {
    std::size_t len = a.size();
    L2Series base = (e < 0) ? invert(a) : a;
    int n = std::abs(e);
    L2Series r(len, Rat(0));
    r[0] = 1;
    for (int i = 0; i < n; ++i) r = mul(r, base);
    return r;
}

}  // namespace

Rat gv_coefficient(int gprime, int g, int k) {
    if (g < gprime) return Rat(0);
    int len = g - gprime + 1;
    L2Series p = power(sin_ratio(k, len), 2 * gprime - 2);
    return make_rat(1, k) * p[len - 1];
}

GWTable gv_transform(const BPSTable& bps, int gmax, int dmax) {
    GWTable out;
    for (int g = 0; g <= gmax; ++g)
        for (int d = 1; d <= dmax; ++d) {
            Rat acc(0);
            for (int k = 1; k <= d; ++k) {
                if (d % k != 0) continue;
                for (int gp = 0; gp <= g; ++gp) {
                    auto it = bps.values.find({gp, d / k});
                    if (it != bps.values.end() && it->second != 0)
                        acc += gv_coefficient(gp, g, k) * it->second;
                }
            }
            out[{g, d}] = acc;
        }
    return out;
}

BPSTable gv_invert(const GWTable& gw, int gmax, int dmax) {
    BPSTable out;
    for (int d = 1; d <= dmax; ++d)
        for (int g = 0; g <= gmax; ++g) {
            auto it = gw.find({g, d});
            Rat acc = (it != gw.end()) ? it->second : Rat(0);
            for (int k = 1; k <= d; ++k) {
                if (d % k != 0) continue;
                for (int gp = 0; gp <= g; ++gp) {
                    if (k == 1 && gp == g) continue;
                    auto jt = out.values.find({gp, d / k});
                    if (jt != out.values.end() && jt->second != 0)
                        acc -= gv_coefficient(gp, g, k) * jt->second;
                }
            }
            out.values[{g, d}] = acc;
            if (!is_integer(acc)) out.non_integral.push_back({g, d});
        }
    return out;
}

}  // namespace nlk3
