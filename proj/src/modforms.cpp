#include <nlk3/lattice.hpp>
#include <nlk3/linalg.hpp>
#include <nlk3/modforms.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlk3 {

int exact_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    int piv = 0;
    for (std::size_t col = 0; col < cols && piv < static_cast<int>(m.size()); ++col) {
        int p = -1;
        for (int r = piv; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[piv], m[p]);
        Rat pv = m[piv][col];
        for (auto& x : m[piv]) x /= pv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == piv || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[piv][j];
        }
        ++piv;
    }
    return piv;
}

LinearSolution solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, int unknowns) {
    LinearSolution out;
    int rows = static_cast<int>(m.size());
    for (auto& row : m) row.resize(unknowns, Rat(0));
    std::vector<int> pivot_col;
    int piv = 0;
    for (int col = 0; col < unknowns && piv < rows; ++col) {
        int p = -1;
        for (int r = piv; r < rows; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[piv], m[p]);
        std::swap(rhs[piv], rhs[p]);
        Rat pv = m[piv][col];
        for (auto& x : m[piv]) x /= pv;
        rhs[piv] /= pv;
        for (int r = 0; r < rows; ++r) {
            if (r == piv || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j < unknowns; ++j) m[r][j] -= f * m[piv][j];
            rhs[r] -= f * rhs[piv];
        }
        pivot_col.push_back(col);
        ++piv;
    }
    out.rank = piv;
    for (int r = piv; r < rows; ++r)
        if (rhs[r] != 0) out.consistent = false;
    if (out.rank == unknowns && out.consistent) {
        out.x.assign(unknowns, Rat(0));
        for (int i = 0; i < piv; ++i) out.x[pivot_col[i]] = rhs[i];
    }
    return out;
}

const FracSeries& VVForm::component(std::int64_t r) const {
    std::int64_t rr = ((r % level) + level) % level;
    if (rr > level / 2) rr = level - rr;
    return components.at(static_cast<std::size_t>(rr));
}

namespace {
FracSeries theta_signed(std::int64_t den, bool alternating, int trunc) {
    FracSeries s(den, Rat(trunc));
    for (std::int64_t n = 0;; ++n) {
        Rat e = make_rat(n * n, den);
        if (e >= s.truncation()) break;
        Rat w = (alternating && (n % 2 != 0)) ? Rat(-1) : Rat(1);
        s.set_coeff(e, s.coeff(e) + (n == 0 ? w : 2 * w));
    }
    return s;
}
}  // namespace

FracSeries theta_A(int trunc) { return theta_signed(8, false, trunc); }
FracSeries theta_B(int trunc) { return theta_signed(8, true, trunc); }

std::pair<FracSeries, FracSeries> theta_UV(int trunc) {
    return {theta_signed(4, false, trunc), theta_signed(4, true, trunc)};
}

Rat bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: k >= 0");
    // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    std::vector<Rat> b(k + 1);
    for (int m = 0; m <= k; ++m) {
        if (m == 0) {
            b[0] = 1;
            continue;
        }
        Rat acc(0);
        for (int j = 0; j < m; ++j) acc += Rat(binomial(Int(m + 1), j)) * b[j];
        b[m] = -acc / Rat(m + 1);
    }
    return b[k];
}

FracSeries eisenstein(int k, int trunc) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein: even k >= 4 required");
    FracSeries s = FracSeries::constant(1, Rat(trunc));
    Rat factor = Rat(-2 * k) / bernoulli(k);
    for (std::int64_t n = 1; n < trunc; ++n) {
        Int sig(0);
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) {
                Int p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                              static_cast<unsigned long>(k - 1));
                sig += p;
            }
        s.set_coeff(Rat(n), factor * Rat(sig));
    }
    return s;
}

FracSeries rc_bracket(const FracSeries& f, const Rat& k1, const FracSeries& g, const Rat& k2,
                      int n) {
    if (n < 0) throw std::invalid_argument("rc_bracket: n >= 0");
    std::vector<FracSeries> fd{f}, gd{g};
    for (int i = 0; i < n; ++i) {
        fd.push_back(fd.back().q_derivative());
        gd.push_back(gd.back().q_derivative());
    }
    FracSeries out(f.grading(), std::min(f.truncation(), g.truncation()));
    for (int r = 0; r <= n; ++r) {
        Rat c = gbinomial(Rat(n) + k1 - 1, n - r) * gbinomial(Rat(n) + k2 - 1, r);
        if (r % 2 != 0) c = -c;
        if (c == 0) continue;
        out = out + (fd[r] * gd[n - r]) * c;
    }
    return out;
}

VVForm rc_bracket(const VVForm& f, const Rat& k1, const FracSeries& g, const Rat& k2, int n) {
    VVForm out;
    out.level = f.level;
    Rat wt = Rat(f.weight_num2) / 2 + k2 + 2 * n;
    out.weight_num2 = to_int64(Rat(wt * 2).get_num());
    for (const auto& comp : f.components) out.components.push_back(rc_bracket(comp, k1, g, k2, n));
    return out;
}

VVForm siegel_theta(std::int64_t l, int trunc) {
    if (l <= 0 || l % 2 != 0) throw std::invalid_argument("siegel_theta: even l > 0");
    VVForm out;
    out.level = l;
    out.weight_num2 = 1;
    for (std::int64_t r = 0; r <= l / 2; ++r) {
        FracSeries comp(2 * l, Rat(trunc));
        // (ls + r)^2/(2l) < trunc  =>  |ls + r| < sqrt(2l trunc)
        std::int64_t bound =
            static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(l) * trunc)) + l + 2;
        for (std::int64_t s = -bound; s <= bound; ++s) {
            std::int64_t m = l * s + r;
            Rat e = make_rat(m * m, 2 * l);
            if (e >= comp.truncation()) continue;
            comp.set_coeff(e, comp.coeff(e) + 1);
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::vector<VVForm> basis_forms(std::int64_t l, int trunc) {
    if (l != 2 && l != 4 && l != 6 && l != 8)
        throw std::invalid_argument("basis_forms: l must be in {2,4,6,8}");
    VVForm theta = siegel_theta(l, trunc);
    int nmax = (l == 8) ? 3 : static_cast<int>(l / 2);
    std::vector<VVForm> basis;
    for (int n = 0; n <= nmax; ++n) {
        FracSeries e = eisenstein(10 - 2 * n, trunc);
        basis.push_back(rc_bracket(theta, make_rat(1, 2), e, Rat(10 - 2 * n), n));
    }
    return basis;
}

FitResult fit(std::int64_t l, const std::vector<FitConstraint>& constraints, int trunc) {
    std::vector<VVForm> basis = basis_forms(l, trunc);
    int m = static_cast<int>(basis.size());
    if (static_cast<int>(constraints.size()) != m)
        throw std::runtime_error("fit: need exactly " + std::to_string(m) + " constraints");
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const auto& c : constraints) {
        std::vector<Rat> row;
        for (const auto& b : basis) row.push_back(b.component(c.component).coeff(c.exponent));
        rows.push_back(std::move(row));
        rhs.push_back(c.value);
    }
    LinearSolution sol = solve_exact(std::move(rows), std::move(rhs), m);
    if (sol.rank < m) throw std::runtime_error("fit: singular constraint system");
    if (!sol.consistent) throw std::runtime_error("fit: inconsistent constraints");
    FitResult out;
    out.coefficients = sol.x;
    out.form.level = l;
    out.form.weight_num2 = 21;
    for (int r = 0; r <= static_cast<int>(l / 2); ++r) {
        FracSeries acc(2 * l, Rat(trunc));
        for (int n = 0; n < m; ++n) acc = acc + basis[n].components[r] * sol.x[n];
        out.form.components.push_back(std::move(acc));
    }
    return out;
}

FracSeries scalarize(const VVForm& f) {
    FracSeries acc(2 * f.level, f.components.at(0).truncation());
    for (const auto& c : f.components) acc = acc + c;
    return acc;
}

NLValue nl_lookup(const VVForm& f, std::int64_t h, std::int64_t d) {
    std::int64_t D = LatticePair{f.level, h, d}.disc();
    if (D < 0) return {Rat(0), true};
    Rat e = make_rat(D, 2 * f.level);
    return {f.component(d).coeff(e), false};
}

bool grading_invariant_holds(const VVForm& f) {
    for (std::size_t r = 0; r < f.components.size(); ++r) {
        const FracSeries& comp = f.components[r];
        Rat offset = make_rat(static_cast<std::int64_t>(r * r), 2 * f.level);
        for (const auto& [k, v] : comp.terms()) {
            Rat diff = comp.exponent_at(k) - offset;
            if (!is_integer(diff)) return false;
        }
    }
    return true;
}

namespace {
constexpr double kTau = 6.283185307179586476925286766559;  // 2 pi
}

WeilRep weil_rep(std::int64_t l) {
    if (l <= 0 || l % 2 != 0) throw std::invalid_argument("weil_rep: even l > 0");
    std::size_t n = static_cast<std::size_t>(l);
    WeilRep rep;
    rep.t.assign(n, std::vector<std::complex<double>>(n, 0.0));
    rep.s.assign(n, std::vector<std::complex<double>>(n, 0.0));
    // discriminant form Z/lZ generated by w/l with <w,w> = -l:
    // <r w/l, r w/l>/2 = -r^2/(2l),  <r w/l, s w/l> = -rs/l
    for (std::size_t r = 0; r < n; ++r) {
        double rr = static_cast<double>(r * r);
        rep.t[r][r] = std::polar(1.0, -kTau * rr / (2.0 * static_cast<double>(l)));
    }
    // sqrt(i)^{n-2} with n = 19: e^{i pi 17/4} = e^{i pi/4}
    std::complex<double> phase = std::polar(1.0, kTau / 8.0);
    double norm = 1.0 / std::sqrt(static_cast<double>(l));
    for (std::size_t dd = 0; dd < n; ++dd)
        for (std::size_t g = 0; g < n; ++g)
            rep.s[dd][g] =
                phase * norm *
                std::polar(1.0, kTau * static_cast<double>(dd * g) / static_cast<double>(l));
    return rep;
}

WeilRep weil_rep_dual(std::int64_t l) {
    WeilRep rep = weil_rep(l);
    for (auto& row : rep.t)
        for (auto& x : row) x = std::conj(x);
    for (auto& row : rep.s)
        for (auto& x : row) x = std::conj(x);
    return rep;
}

namespace {
std::complex<double> eval_series(const FracSeries& s, std::complex<double> tau) {
    std::complex<double> acc = 0.0;
    for (const auto& [k, v] : s.terms()) {
        double e = static_cast<double>(k) / static_cast<double>(s.grading());
        acc += v.get_d() * std::exp(std::complex<double>(0.0, kTau) * tau * e);
    }
    return acc;
}
}  // namespace

double numeric_modularity_check(const VVForm& f, const std::vector<std::complex<double>>& taus) {
    WeilRep dual = weil_rep_dual(f.level);
    std::size_t n = static_cast<std::size_t>(f.level);
    double worst = 0.0;
    for (std::complex<double> tau : taus) {
        std::vector<std::complex<double>> at_tau(n), at_stau(n);
        for (std::size_t r = 0; r < n; ++r) {
            const FracSeries& comp = f.component(static_cast<std::int64_t>(r));
            at_tau[r] = eval_series(comp, tau);
            at_stau[r] = eval_series(comp, -1.0 / tau);
        }
        std::complex<double> root = std::sqrt(tau);
        if (root.real() < 0) root = -root;
        std::complex<double> autom = std::pow(root, static_cast<double>(f.weight_num2));
        for (std::size_t dd = 0; dd < n; ++dd) {
            std::complex<double> rhs = 0.0;
            for (std::size_t g = 0; g < n; ++g) rhs += dual.s[dd][g] * at_tau[g];
            worst = std::max(worst, std::abs(at_stau[dd] - autom * rhs));
        }
    }
    return worst;
}

const std::vector<Family>& preset_families() {
    static const std::vector<Family> families = [] {
        auto with_vanishing = [](std::int64_t l, std::vector<FitConstraint> base) {
            for (const auto& [e, comp] : vanishing_constraints(l))
                base.push_back({e, comp, Rat(0)});
            return base;
        };
        std::vector<Family> fams;
        fams.push_back({"l2-sextic", 2, {{Rat(0), 0, Rat(-1)}, {Rat(1), 0, Rat(150)}}});
        fams.push_back({"quartic-pencil", 4, with_vanishing(4, {{Rat(0), 0, Rat(-1)}})});
        fams.push_back(
            {"l6-family1", 6, with_vanishing(6, {{Rat(0), 0, Rat(-1)}, {Rat(1), 0, Rat(98)}})});
        // 78 nodal fibers: the value consistent with the lines count 198 and
        // the elliptic-plane-curve count 10 of this pencil
        fams.push_back(
            {"l6-family2", 6, with_vanishing(6, {{Rat(0), 0, Rat(-1)}, {Rat(1), 0, Rat(78)}})});
        fams.push_back(
            {"l8-quadrics", 8, with_vanishing(8, {{Rat(0), 0, Rat(-1)}, {Rat(1), 0, Rat(80)}})});
        return fams;
    }();
    return families;
}

const Family& preset_family(const std::string& name) {
    for (const auto& f : preset_families())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown family preset: " + name);
}

}  // namespace nlk3
