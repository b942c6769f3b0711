#include <nlk3/mirror.hpp>

#include <stdexcept>

namespace nlk3 {

QQ2::QQ2(int d1max, int d2max) : d1_(d1max), d2_(d2max) {
    if (d1_ < 0 || d2_ < 0) throw std::invalid_argument("QQ2: negative truncation");
    v_.assign(static_cast<std::size_t>(d1_ + 1) * (d2_ + 1), Rat(0));
}

std::size_t QQ2::idx(int d1, int d2) const {
    if (d1 < 0 || d1 > d1_ || d2 < 0 || d2 > d2_) throw std::out_of_range("QQ2: index");
    return static_cast<std::size_t>(d1) * (d2_ + 1) + d2;
}

bool QQ2::is_zero() const {
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

namespace {
void check_compatible(const QQ2& a, const QQ2& b) {
    if (a.d1max() != b.d1max() || a.d2max() != b.d2max())
        throw std::invalid_argument("QQ2: mismatched truncations");
}
}  // namespace

QQ2 operator+(const QQ2& a, const QQ2& b) {
    check_compatible(a, b);
    QQ2 r(a.d1max(), a.d2max());
    for (int i = 0; i <= a.d1max(); ++i)
        for (int j = 0; j <= a.d2max(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

QQ2 operator-(const QQ2& a, const QQ2& b) {
    check_compatible(a, b);
    QQ2 r(a.d1max(), a.d2max());
    for (int i = 0; i <= a.d1max(); ++i)
        for (int j = 0; j <= a.d2max(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

QQ2 operator*(const QQ2& a, const QQ2& b) {
    check_compatible(a, b);
    QQ2 r(a.d1max(), a.d2max());
    for (int i = 0; i <= a.d1max(); ++i)
        for (int j = 0; j <= a.d2max(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; i + k <= a.d1max(); ++k)
                for (int m = 0; j + m <= a.d2max(); ++m) {
                    if (b.at(k, m) == 0) continue;
                    r.at(i + k, j + m) += a.at(i, j) * b.at(k, m);
                }
        }
    return r;
}

QQ2 QQ2::operator*(const Rat& s) const {
    QQ2 r(d1_, d2_);
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] * s;
    return r;
}

QQ2 QQ2::inverse() const {
    if (at(0, 0) == 0) throw std::domain_error("QQ2::inverse: zero constant term");
    QQ2 u = *this * (1 / at(0, 0));
    u.at(0, 0) = 0;
    QQ2 acc(d1_, d2_), term(d1_, d2_);
    acc.at(0, 0) = 1;
    term.at(0, 0) = 1;
    for (int i = 0; i < d1_ + d2_ + 1; ++i) {
        term = term * u;
        if (term.is_zero()) break;
        acc = (i % 2 == 0) ? acc - term : acc + term;
    }
    return acc * (1 / at(0, 0));
}

QQ2 QQ2::exponential() const {
    if (at(0, 0) != 0) throw std::domain_error("QQ2::exponential: nonzero constant term");
    QQ2 acc(d1_, d2_), term(d1_, d2_);
    acc.at(0, 0) = 1;
    term.at(0, 0) = 1;
    for (int n = 1; n <= d1_ + d2_; ++n) {
        term = term * *this * make_rat(1, n);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

QQ2 QQ2::compose(const QQ2& s1, const QQ2& s2) const {
    if (s1.at(0, 0) != 0 || s2.at(0, 0) != 0)
        throw std::domain_error("QQ2::compose: substituted series need zero constant term");
    QQ2 out(d1_, d2_);
    QQ2 p1(d1_, d2_);
    p1.at(0, 0) = 1;
    for (int i = 0; i <= d1_; ++i) {
        QQ2 p2 = p1;
        for (int j = 0; j <= d2_; ++j) {
            if (at(i, j) != 0) out = out + p2 * at(i, j);
            if (j < d2_) p2 = p2 * s2;
        }
        if (i < d1_) p1 = p1 * s1;
    }
    return out;
}

TPoly TPoly::zero(int d1max, int d2max) {
    TPoly p;
    for (auto& row : p.a)
        for (auto& x : row) x = QQ2(d1max, d2max);
    return p;
}

TPoly operator+(const TPoly& x, const TPoly& y) {
    TPoly r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) r.a[i][j] = x.a[i][j] + y.a[i][j];
    return r;
}

TPoly operator-(const TPoly& x, const TPoly& y) {
    TPoly r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) r.a[i][j] = x.a[i][j] - y.a[i][j];
    return r;
}

TPoly operator*(const TPoly& x, const TPoly& y) {
    TPoly r = TPoly::zero(x.a[0][0].d1max(), x.a[0][0].d2max());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
            if (x.a[i][j].is_zero()) continue;
            for (int k = 0; i + k < 4; ++k)
                for (int m = 0; j + m < 2; ++m) {
                    if (y.a[k][m].is_zero()) continue;
                    r.a[i + k][j + m] = r.a[i + k][j + m] + x.a[i][j] * y.a[k][m];
                }
        }
    return r;
}

TPoly TPoly::operator*(const Rat& s) const {
    TPoly r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] * s;
    return r;
}

TPoly TPoly::scaled_by(const QQ2& q) const {
    TPoly r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] * q;
    return r;
}

bool TPoly::t_free() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            if ((i > 0 || j > 0) && !a[i][j].is_zero()) return false;
    return true;
}

MirrorSeries::MirrorSeries(int d1max, int d2max) : d1_(d1max), d2_(d2max) {
    for (auto& row : blocks_)
        for (auto& b : row) b = TPoly::zero(d1max, d2max);
}

Rat MirrorSeries::coefficient(int i, int j, int a, int b, int d1, int d2) const {
    return blocks_.at(i).at(j).a.at(a).at(b).at(d1, d2);
}

QQ2 hyper_F(int d1max, int d2max) {
    QQ2 f(d1max, d2max);
    for (int d1 = 0; d1 <= d1max; ++d1)
        for (int d2 = 0; d2 <= d2max; ++d2)
            f.at(d1, d2) = Rat(factorial(4 * d1 + 2 * d2)) /
                           Rat(factorial(d1) * factorial(d1) * factorial(d1) * factorial(d1) *
                               factorial(d2) * factorial(d2));
    return f;
}

QQ2 hyper_G(int a, int b, int d1max, int d2max) {
    QQ2 f = hyper_F(d1max, d2max);
    QQ2 g(d1max, d2max);
    for (int d1 = 0; d1 <= d1max; ++d1)
        for (int d2 = 0; d2 <= d2max; ++d2) {
            Rat harmonic(0);
            for (int r = 1; r <= a * d1 + b * d2; ++r) harmonic += make_rat(1, r);
            g.at(d1, d2) = f.at(d1, d2) * harmonic;
        }
    return g;
}

namespace {

// elements of Q[H1, H2]/(H1^4, H2^2)
struct RingElem {
    std::array<std::array<Rat, 2>, 4> c{};
};

RingElem ring_mul(const RingElem& x, const RingElem& y) {
    RingElem r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
            if (x.c[i][j] == 0) continue;
            for (int k = 0; i + k < 4; ++k)
                for (int m = 0; j + m < 2; ++m) r.c[i + k][j + m] += x.c[i][j] * y.c[k][m];
        }
    return r;
}

// (r0 + H)^{-1} in the nilpotent ring, H = h1coef*H1 + h2coef*H2, r0 != 0
RingElem ring_linear_inverse(std::int64_t r0, std::int64_t h1coef, std::int64_t h2coef) {
    RingElem u;  // -H/r0 and its powers accumulated as a geometric series
    u.c[1][0] = make_rat(-h1coef, r0);
    u.c[0][1] = make_rat(-h2coef, r0);
    RingElem acc, term;
    acc.c[0][0] = 1;
    term.c[0][0] = 1;
    for (int i = 0; i < 5; ++i) {
        term = ring_mul(term, u);
        bool zero = true;
        for (auto& row : term.c)
            for (auto& x : row) zero &= (x == 0);
        if (zero) break;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 2; ++b) acc.c[a][b] += term.c[a][b];
    }
    for (auto& row : acc.c)
        for (auto& x : row) x /= r0;
    return acc;
}

}  // namespace

MirrorSeries i_functions(int d1max, int d2max) {
    MirrorSeries out(d1max, d2max);
    std::array<Rat, 4> inv_fact{Rat(1), Rat(1), make_rat(1, 2), make_rat(1, 6)};
    for (int d1 = 0; d1 <= d1max; ++d1)
        for (int d2 = 0; d2 <= d2max; ++d2) {
            int n = 4 * d1 + 2 * d2;
            RingElem prod;
            prod.c[0][0] = 1;
            for (int r = 0; r <= n; ++r) {
                RingElem f;
                f.c[0][0] = r;
                f.c[1][0] = 4;
                f.c[0][1] = 2;
                prod = ring_mul(prod, f);
            }
            for (int r = 1; r <= d1; ++r) {
                RingElem inv = ring_linear_inverse(r, 1, 0);
                for (int rep = 0; rep < 4; ++rep) prod = ring_mul(prod, inv);
            }
            for (int r = 1; r <= d2; ++r) {
                RingElem inv = ring_linear_inverse(r, 0, 1);
                for (int rep = 0; rep < 2; ++rep) prod = ring_mul(prod, inv);
            }
            // times e^{H1 t1} e^{H2 t2} = (sum_a H1^a t1^a/a!)(1 + H2 t2)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int i = 0; a + i < 4; ++i)
                        for (int j = 0; b + j < 2; ++j) {
                            const Rat& v = prod.c[i][j];
                            if (v == 0) continue;
                            out.block(a + i, b + j).a[a][b].at(d1, d2) += v * inv_fact[a];
                        }
        }
    return out;
}

MirrorMap mirror_map(int d1max, int d2max) {
    QQ2 f = hyper_F(d1max, d2max);
    QQ2 finv = f.inverse();
    QQ2 g42 = hyper_G(4, 2, d1max, d2max);
    MirrorMap m;
    m.corr1 = (g42 - hyper_G(1, 0, d1max, d2max)) * finv * Rat(4);
    m.corr2 = (g42 - hyper_G(0, 1, d1max, d2max)) * finv * Rat(2);
    if (m.corr1.at(0, 0) != 0 || m.corr2.at(0, 0) != 0)
        throw std::runtime_error("mirror_map: corrections must vanish at the origin");
    m.unit1 = m.corr1.exponential();
    m.unit2 = m.corr2.exponential();
    return m;
}

namespace {
// q_i represented as q_i = Q_i * u_i(Q); multiply out to the full series
// s_i(Q) = Q_i * u_i(Q) for substitution (degree shift by one in Q_i)
QQ2 shift_q1(const QQ2& u) {
    QQ2 r(u.d1max(), u.d2max());
    for (int i = 0; i + 1 <= u.d1max(); ++i)
        for (int j = 0; j <= u.d2max(); ++j) r.at(i + 1, j) = u.at(i, j);
    return r;
}
QQ2 shift_q2(const QQ2& u) {
    QQ2 r(u.d1max(), u.d2max());
    for (int i = 0; i <= u.d1max(); ++i)
        for (int j = 0; j + 1 <= u.d2max(); ++j) r.at(i, j + 1) = u.at(i, j);
    return r;
}
}  // namespace

std::pair<QQ2, QQ2> invert_map(const QQ2& unit1, const QQ2& unit2) {
    if (unit1.at(0, 0) != 1 || unit2.at(0, 0) != 1)
        throw std::invalid_argument("invert_map: unit series must have constant term 1");
    int d1max = unit1.d1max(), d2max = unit1.d2max();
    QQ2 u1(d1max, d2max), u2(d1max, d2max);
    u1.at(0, 0) = 1;
    u2.at(0, 0) = 1;
    // fixed point of u_i(Q) = 1 / unit_i(q(Q)); each pass gains one adic order
    for (int pass = 0; pass <= d1max + d2max + 1; ++pass) {
        QQ2 s1 = shift_q1(u1), s2 = shift_q2(u2);
        QQ2 n1 = unit1.compose(s1, s2).inverse();
        QQ2 n2 = unit2.compose(s1, s2).inverse();
        if ((n1 - u1).is_zero() && (n2 - u2).is_zero()) break;
        u1 = n1;
        u2 = n2;
    }
    // round-trip identity: unit_i(q(Q)) * u_i(Q) == 1
    QQ2 s1 = shift_q1(u1), s2 = shift_q2(u2);
    QQ2 one(d1max, d2max);
    one.at(0, 0) = 1;
    if (!(unit1.compose(s1, s2) * u1 - one).is_zero() ||
        !(unit2.compose(s1, s2) * u2 - one).is_zero())
        throw std::runtime_error("invert_map: round-trip identity failed");
    return {u1, u2};
}

Potential potential(int d1max, int d2max) {
    MirrorSeries iv = i_functions(d1max, d2max);
    // structural reads used by the formula: I_{0,0} = 0 and I_{1,0} = 4F, t-free
    if (!iv.block(0, 0).a[0][0].is_zero() || !iv.block(0, 0).t_free())
        throw std::runtime_error("potential: I_{0,0} != 0");
    if (!iv.block(1, 0).t_free()) throw std::runtime_error("potential: I_{1,0} has log terms");
    QQ2 i10 = iv.block(1, 0).a[0][0];
    QQ2 i10inv = i10.inverse();

    auto ratio = [&](int i, int j) { return iv.block(i, j).scaled_by(i10inv); };
    TPoly r20 = ratio(2, 0), r11 = ratio(1, 1), r30 = ratio(3, 0), r21 = ratio(2, 1),
          r31 = ratio(3, 1);
    TPoly rhs = (r11 * Rat(2) - r20) * r30 + (r20 * r21) * Rat(2) - r31 * Rat(2);

    Potential out{QQ2(d1max, d2max), mirror_map(d1max, d2max), QQ2(), QQ2()};

    // classical part (t1 + corr1)^3/3 + 2 (t1 + corr1)^2 (t2 + corr2),
    // written in the same (t, q) coordinates
    TPoly t1c = TPoly::zero(d1max, d2max);
    t1c.a[1][0].at(0, 0) = 1;
    t1c.a[0][0] = out.map.corr1;
    TPoly t2c = TPoly::zero(d1max, d2max);
    t2c.a[0][1].at(0, 0) = 1;
    t2c.a[0][0] = out.map.corr2;
    TPoly t1sq = t1c * t1c;
    TPoly classical = (t1sq * t1c) * make_rat(1, 3) + (t1sq * t2c) * Rat(2);

    TPoly reduced = rhs - classical;
    if (!reduced.t_free())
        throw std::runtime_error("potential: log terms fail to cancel");

    // change of variables q -> Q on the t-free remainder
    auto [u1, u2] = invert_map(out.map.unit1, out.map.unit2);
    out.q1_of_Q = shift_q1(u1);
    out.q2_of_Q = shift_q2(u2);
    out.instanton = reduced.a[0][0].compose(out.q1_of_Q, out.q2_of_Q);
    if (out.instanton.at(0, 0) != 0)
        throw std::runtime_error("potential: unexpected constant term");
    return out;
}

BPSTable fiber_bps(int dmax, int d2max) {
    Potential pot = potential(dmax, d2max);
    GWTable gw;
    for (int d = 1; d <= dmax; ++d) gw[{0, d}] = pot.instanton.at(d, 0);
    return gv_invert(gw, 0, dmax);
}

}  // namespace nlk3
