#include "logint/reduce.hpp"

#include "logint/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace logint::reduce {

using specfun::kPi;

namespace {

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// ------------------------------------------------------------------ parser

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RationalIntegrand run() {
        RationalIntegrand r;
        skip_ws();
        if (try_log()) {
            r.has_log = true;
            r.numerator = Polynomial(Rational(1));
        } else {
            r.numerator = parse_poly_operand();
            skip_ws();
            if (accept('*')) {
                if (!try_log()) fail("expected ln(x) after '*'");
                r.has_log = true;
            }
        }
        expect('/', "expected '/' before denominator");
        parse_denominator(r);
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        finalize(r);
        return r;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    Rational scale_ = 1;  // leading coefficients of non-monic factors

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& msg) {
        if (!accept(c)) fail(msg);
    }

    bool try_log() {
        skip_ws();
        if (s_.compare(pos_, 5, "ln(x)") == 0) {
            pos_ += 5;
            return true;
        }
        return false;
    }

    BigInt parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    // integer, optionally followed by "/integer" (but not "/(" which starts
    // the denominator)
    Rational parse_rational() {
        BigInt num = parse_integer();
        size_t save = pos_;
        if (accept('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                BigInt den = parse_integer();
                if (den == 0) fail("zero denominator in coefficient");
                return Rational(num, den);
            }
            pos_ = save;
        }
        return Rational(num);
    }

    Polynomial parse_monomial() {
        skip_ws();
        Rational c = 1;
        bool have_coef = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            c = parse_rational();
            have_coef = true;
            const size_t save = pos_;
            // a '*' not followed by the variable belongs to the term level
            // (e.g. "2*ln(x)")
            if (accept('*') && peek() != 'x') pos_ = save;
        }
        if (peek() == 'x') {
            ++pos_;
            int e = 1;
            if (accept('^')) e = parse_integer().convert_to<int>();
            return Polynomial::monomial(e, c);
        }
        if (!have_coef) fail("expected coefficient or 'x'");
        return Polynomial(c);
    }

    Polynomial parse_poly() {
        Polynomial r;
        int sign = 1;
        if (accept('+')) {
        } else if (accept('-')) {
            sign = -1;
        }
        for (;;) {
            r += parse_monomial() * Rational(sign);
            if (accept('+')) {
                sign = 1;
            } else if (accept('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        return r;
    }

    Polynomial parse_poly_operand() {
        if (accept('(')) {
            Polynomial p = parse_poly();
            expect(')', "expected ')'");
            return p;
        }
        return parse_poly();
    }

    void parse_denominator(RationalIntegrand& r) {
        // the factor product may be wrapped in one enclosing pair of parens,
        // e.g. "x*ln(x)/((x+1)^2*(x^2+4))"
        bool enclosed = false;
        if (peek() == '(') {
            const size_t save = pos_;
            ++pos_;
            if (peek() == '(') {
                enclosed = true;
            } else {
                pos_ = save;
            }
        }
        for (;;) {
            parse_factor(r);
            if (!accept('*')) break;
        }
        if (enclosed) expect(')', "expected ')' closing the denominator");
    }

    void parse_factor(RationalIntegrand& r) {
        skip_ws();
        size_t start = pos_;
        expect('(', "expected '(' to open a denominator factor");
        Polynomial p = parse_poly();
        expect(')', "expected ')' to close a denominator factor");
        int mult = 1;
        if (accept('^')) {
            mult = parse_integer().convert_to<int>();
            if (mult < 1) fail("factor power must be >= 1");
        }
        const std::string text = s_.substr(start, pos_ - start);
        classify_factor(p, mult, text, r);
    }

    void classify_factor(const Polynomial& p, int mult, const std::string& text,
                         RationalIntegrand& r) {
        if (p.degree() == 1) {
            const Rational lead = p.coeff(1);
            const Rational a = p.coeff(0) / lead;
            if (a <= 0)
                throw UnsupportedPoleError(
                    "unsupported factor " + text + ": pole at " + logint::to_string(-a) +
                        " lies on the integration path",
                    text);
            for (int i = 0; i < mult; ++i) scale_ *= lead;
            r.linear_factors.push_back({a, mult});
            return;
        }
        if (p.degree() == 2) {
            if (p.coeff(1) != 0)
                throw UnsupportedPoleError("unsupported factor " + text +
                                               ": poles must be real negative or purely imaginary",
                                           text);
            const Rational lead = p.coeff(2);
            const Rational a2 = p.coeff(0) / lead;
            if (a2 <= 0)
                throw UnsupportedPoleError(
                    "unsupported factor " + text + ": real pole on the integration path", text);
            const BigInt sn = boost::multiprecision::sqrt(numerator(a2));
            const BigInt sd = boost::multiprecision::sqrt(denominator(a2));
            if (sn * sn != numerator(a2) || sd * sd != denominator(a2))
                throw UnsupportedPoleError("unsupported factor " + text + ": " +
                                               logint::to_string(a2) +
                                               " is not the square of a rational",
                                           text);
            for (int i = 0; i < mult; ++i) scale_ *= lead;
            r.quad_factors.push_back({Rational(sn, sd), mult});
            return;
        }
        throw UnsupportedPoleError(
            "unsupported factor " + text + ": only (x+a) and (x^2+a^2) shapes are handled", text);
    }

    void finalize(RationalIntegrand& r) {
        if (r.numerator.is_zero()) fail("numerator is identically zero");
        if (r.linear_factors.empty() && r.quad_factors.empty())
            fail("denominator has no factors");
        r.numerator = r.numerator * (Rational(1) / scale_);
        auto by_a = [](const auto& l, const auto& rgt) { return l.a < rgt.a; };
        std::sort(r.linear_factors.begin(), r.linear_factors.end(), by_a);
        std::sort(r.quad_factors.begin(), r.quad_factors.end(), by_a);
        auto merge = [](auto& v) {
            size_t w = 0;
            for (size_t i = 0; i < v.size(); ++i) {
                if (w > 0 && v[w - 1].a == v[i].a) {
                    v[w - 1].mult += v[i].mult;
                } else {
                    v[w++] = v[i];
                }
            }
            v.resize(w);
        };
        merge(r.linear_factors);
        merge(r.quad_factors);
    }
};

Polynomial linear_poly(const Rational& a) {
    return Polynomial(std::vector<Rational>{a, Rational(1)});
}
Polynomial quad_poly(const Rational& a) {
    return Polynomial(std::vector<Rational>{a * a, Rational(0), Rational(1)});
}

}  // namespace

RationalIntegrand parse_integrand(const std::string& text) { return Parser(text).run(); }

Polynomial RationalIntegrand::denominator() const {
    Polynomial d(Rational(1));
    for (const auto& f : linear_factors) d = d * linear_poly(f.a).pow(f.mult);
    for (const auto& f : quad_factors) d = d * quad_poly(f.a).pow(f.mult);
    return d;
}

double RationalIntegrand::eval(double x) const {
    double v;
    if (x > 1e12) {
        // log-space to dodge overflow; the dropped lower-order numerator
        // terms are O(1/x) relative, far below what these tails contribute
        const int d = numerator.degree();
        const double lead = to_double(numerator.coeff(d));
        double logr = std::log(std::fabs(lead)) + d * std::log(x);
        for (const auto& f : linear_factors)
            logr -= f.mult * (std::log(x) + std::log1p(to_double(f.a) / x));
        for (const auto& f : quad_factors) {
            const double aa = to_double(f.a);
            logr -= f.mult * (2.0 * std::log(x) + std::log1p(aa * aa / (x * x)));
        }
        v = (lead < 0 ? -1.0 : 1.0) * std::exp(logr);
    } else {
        double den = 1.0;
        for (const auto& f : linear_factors) den *= ipow(x + to_double(f.a), f.mult);
        for (const auto& f : quad_factors) {
            const double aa = to_double(f.a);
            den *= ipow(x * x + aa * aa, f.mult);
        }
        v = numerator.eval(x) / den;
    }
    return has_log ? v * std::log(x) : v;
}

// ------------------------------------------------------- partial fractions

PartialFractionForm partial_fractions(const RationalIntegrand& r) {
    PartialFractionForm pf;
    pf.has_log = r.has_log;

    const Polynomial den = r.denominator();
    auto [quot, rem] = r.numerator.divmod(den);
    pf.poly_part = quot;

    const int n = den.degree();
    if (n == 0) throw std::domain_error("partial_fractions: empty denominator");

    // columns of the ansatz, each a polynomial of degree < n
    std::vector<Polynomial> cols;
    for (const auto& f : r.linear_factors)
        for (int k = 1; k <= f.mult; ++k)
            cols.push_back(den.divmod(linear_poly(f.a).pow(k)).first);
    for (const auto& f : r.quad_factors)
        for (int k = 1; k <= f.mult; ++k) {
            const Polynomial cof = den.divmod(quad_poly(f.a).pow(k)).first;
            cols.push_back(cof * Polynomial::x());  // p-coefficient column
            cols.push_back(cof);                    // q-coefficient column
        }

    const int m = static_cast<int>(cols.size());
    // exact Gaussian elimination on the n x m coefficient-matching system
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(m + 1, Rational(0)));
    for (int row = 0; row < n; ++row) {
        for (int c = 0; c < m; ++c) aug[row][c] = cols[c].coeff(row);
        aug[row][m] = rem.coeff(row);
    }

    std::vector<int> where(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (aug[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        const Rational lead = aug[row][col];
        for (auto& v : aug[row]) v /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            const Rational f = aug[i][col];
            for (int j = col; j <= m; ++j) aug[i][j] -= f * aug[row][j];
        }
        where[col] = row;
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (aug[i][m] != 0)
            throw std::logic_error("partial_fractions: inconsistent system");

    std::vector<Rational> sol(m, Rational(0));
    for (int c = 0; c < m; ++c)
        if (where[c] >= 0) sol[c] = aug[where[c]][m];

    int idx = 0;
    for (const auto& f : r.linear_factors)
        for (int k = 1; k <= f.mult; ++k) pf.linear_terms.push_back({f.a, k, sol[idx++]});
    for (const auto& f : r.quad_factors)
        for (int k = 1; k <= f.mult; ++k) {
            const Rational p = sol[idx++];
            const Rational q = sol[idx++];
            pf.quad_terms.push_back({f.a, k, p, q});
        }
    return pf;
}

Polynomial PartialFractionForm::recombine(const std::vector<LinearFactor>& lin,
                                          const std::vector<QuadFactor>& quad) const {
    Polynomial den(Rational(1));
    for (const auto& f : lin) den = den * linear_poly(f.a).pow(f.mult);
    for (const auto& f : quad) den = den * quad_poly(f.a).pow(f.mult);
    Polynomial out = poly_part * den;
    for (const auto& t : linear_terms)
        out += den.divmod(linear_poly(t.a).pow(t.k)).first * t.coeff;
    for (const auto& t : quad_terms)
        out += den.divmod(quad_poly(t.a).pow(t.k)).first *
               (Polynomial::x() * t.p + Polynomial(t.q));
    return out;
}

// ------------------------------------------------------------ basis mapping

Upper Upper::finite(double b) {
    if (!(b > 0)) throw std::domain_error("upper limit must be > 0");
    return Upper{false, b};
}
Upper Upper::inf() { return Upper{true, 0.0}; }

namespace {

// int_0^y du/(1+u)^k
double linear_kernel(int k, double y) {
    return k == 1 ? std::log1p(y) : (1.0 - std::pow(1.0 + y, 1.0 - k)) / (k - 1);
}

void emit(BasisCombination& bc, double weight, CallKind kind, std::string name, double value) {
    if (weight == 0.0) return;
    bc.terms.push_back({weight, kind, std::move(name), value});
}

void reduce_finite(const PartialFractionForm& pf, double b, BasisCombination& bc) {
    for (int k = 0; k <= pf.poly_part.degree(); ++k) {
        const Rational c = pf.poly_part.coeff(k);
        if (c == 0) continue;
        if (pf.has_log) {
            emit(bc, to_double(c), CallKind::PolyLogPiece,
                 "power_log_int(k=" + std::to_string(k) + ", b=" + fmt(b) + ")",
                 basis::power_log_int(k, b));
        } else {
            emit(bc, to_double(c), CallKind::ElementaryRational,
                 "int x^" + std::to_string(k), std::pow(b, k + 1) / (k + 1));
        }
    }
    for (const auto& t : pf.linear_terms) {
        if (t.coeff == 0) continue;
        const double a = to_double(t.a);
        const double y = b / a;
        const double w0 = to_double(t.coeff) * ipow(1.0 / a, t.k - 1);
        const CallKind ekind = t.k == 1 ? CallKind::ElementaryLog : CallKind::ElementaryRational;
        const std::string ename =
            "int_0^" + fmt(y) + " du/(1+u)^" + std::to_string(t.k);
        if (pf.has_log) {
            if (a != 1.0)
                emit(bc, w0 * std::log(a), ekind, "ln(a)*" + ename, linear_kernel(t.k, y));
            emit(bc, w0, CallKind::H1,
                 "log_linear_int(m=" + std::to_string(t.k) + ", b=" + fmt(y) + ")",
                 basis::log_linear_int(t.k, y));
        } else {
            emit(bc, w0, ekind, ename, linear_kernel(t.k, y));
        }
    }
    for (const auto& t : pf.quad_terms) {
        const double a = to_double(t.a);
        if (t.q != 0) {
            if (pf.has_log) {
                emit(bc, to_double(t.q), CallKind::H2,
                     "log_quad_int(n=" + std::to_string(t.k - 1) + ", a=" + fmt(a) +
                         ", b=" + fmt(b) + ")",
                     basis::log_quad_int(t.k - 1, a, b));
            } else {
                emit(bc, to_double(t.q) * ipow(1.0 / a, 2 * t.k - 1), CallKind::ElementaryArctan,
                     "quad_kernel_int(n=" + std::to_string(t.k - 1) + ", x=" + fmt(b / a) + ")",
                     basis::quad_kernel_int(t.k - 1, b / a));
            }
        }
        if (t.p != 0) {
            const double a2 = a * a;
            const double y2 = (b / a) * (b / a);
            const CallKind ekind =
                t.k == 1 ? CallKind::ElementaryLog : CallKind::ElementaryRational;
            const std::string ename =
                "int_0^" + fmt(y2) + " du/(1+u)^" + std::to_string(t.k);
            if (pf.has_log) {
                const double w1 = to_double(t.p) / 4.0 * ipow(1.0 / a2, t.k - 1);
                if (a != 1.0)
                    emit(bc, w1 * std::log(a2), ekind, "ln(a^2)*" + ename,
                         linear_kernel(t.k, y2));
                emit(bc, w1, CallKind::H1,
                     "log_linear_int(m=" + std::to_string(t.k) + ", b=" + fmt(y2) +
                         ") via u=x^2",
                     basis::log_linear_int(t.k, y2));
            } else {
                emit(bc, to_double(t.p) / 2.0 * ipow(1.0 / a2, t.k - 1), ekind, ename,
                     linear_kernel(t.k, y2));
            }
        }
    }
}

void reduce_halfline(const PartialFractionForm& pf, BasisCombination& bc) {
    if (!pf.poly_part.is_zero())
        throw DivergenceError("reduce: polynomial part diverges on the half-line");
    Rational tail = 0;  // coefficient of 1/x as x -> inf
    for (const auto& t : pf.linear_terms)
        if (t.k == 1) tail += t.coeff;
    for (const auto& t : pf.quad_terms)
        if (t.k == 1) tail += t.p;
    if (tail != 0)
        throw DivergenceError(
            "reduce: integrand decays like 1/x at infinity; the half-line integral diverges");

    for (const auto& t : pf.linear_terms) {
        if (t.coeff == 0) continue;
        const double a = to_double(t.a);
        const double la = std::log(a);
        if (t.k == 1) {
            // marginal terms are paired against 1/(x+1); the pairing
            // references cancel exactly because the tail coefficients sum to 0
            if (pf.has_log) {
                emit(bc, to_double(t.coeff), CallKind::ElementaryLog,
                     "int_0^inf ln x [1/(x+a) - 1/(x+1)], a=" + fmt(a), -0.5 * la * la);
            } else {
                emit(bc, to_double(t.coeff), CallKind::ElementaryLog,
                     "int_0^inf [1/(x+a) - 1/(x+1)], a=" + fmt(a), -la);
            }
            continue;
        }
        const double w0 = to_double(t.coeff) * ipow(1.0 / a, t.k - 1);
        if (pf.has_log) {
            if (a != 1.0)
                emit(bc, w0 * la, CallKind::ElementaryRational,
                     "ln(a)/(k-1), k=" + std::to_string(t.k), 1.0 / (t.k - 1));
            emit(bc, w0, CallKind::H1, "log_linear_halfline(m=" + std::to_string(t.k) + ")",
                 to_double(basis::log_linear_halfline(t.k)));
        } else {
            emit(bc, w0, CallKind::ElementaryRational,
                 "int_0^inf du/(1+u)^" + std::to_string(t.k), 1.0 / (t.k - 1));
        }
    }
    for (const auto& t : pf.quad_terms) {
        const double a = to_double(t.a);
        const double la = std::log(a);
        if (t.q != 0) {
            if (pf.has_log) {
                emit(bc, to_double(t.q), CallKind::H2,
                     "log_quad_halfline_scaled(n=" + std::to_string(t.k - 1) + ", a=" + fmt(a) +
                         ", b=1)",
                     basis::log_quad_halfline_scaled(t.k - 1, a, 1.0));
            } else {
                emit(bc, to_double(t.q) * ipow(1.0 / a, 2 * t.k - 1),
                     CallKind::ElementaryArctan,
                     "pi*wallis_coeff(" + std::to_string(t.k - 1) + ")",
                     kPi * to_double(basis::wallis_coeff(t.k - 1)));
            }
        }
        if (t.p != 0) {
            const double a2 = a * a;
            if (t.k == 1) {
                if (pf.has_log) {
                    emit(bc, to_double(t.p), CallKind::ElementaryLog,
                         "int_0^inf ln x [x/(x^2+a^2) - 1/(x+1)], a=" + fmt(a),
                         -0.5 * la * la + kPi * kPi / 8.0);
                } else {
                    emit(bc, to_double(t.p), CallKind::ElementaryLog,
                         "int_0^inf [x/(x^2+a^2) - 1/(x+1)], a=" + fmt(a), -la);
                }
                continue;
            }
            if (pf.has_log) {
                const double w1 = to_double(t.p) / 4.0 * ipow(1.0 / a2, t.k - 1);
                if (a != 1.0)
                    emit(bc, w1 * std::log(a2), CallKind::ElementaryRational,
                         "ln(a^2)/(k-1), k=" + std::to_string(t.k), 1.0 / (t.k - 1));
                emit(bc, w1, CallKind::H1,
                     "log_linear_halfline(m=" + std::to_string(t.k) + ") via u=x^2",
                     to_double(basis::log_linear_halfline(t.k)));
            } else {
                emit(bc, to_double(t.p) / 2.0 * ipow(1.0 / a2, t.k - 1),
                     CallKind::ElementaryRational,
                     "int_0^inf du/(1+u)^" + std::to_string(t.k) + " via u=x^2",
                     1.0 / (t.k - 1));
            }
        }
    }
}

}  // namespace

BasisCombination reduce_to_basis(const PartialFractionForm& pf, const Upper& upper) {
    BasisCombination bc;
    bc.upper = upper;
    if (upper.infinite) {
        reduce_halfline(pf, bc);
    } else {
        reduce_finite(pf, upper.b, bc);
    }
    return bc;
}

basis::BasisValue evaluate_combination(const BasisCombination& bc) {
    basis::BasisValue out;
    for (const auto& t : bc.terms) {
        const double contrib = t.weight * t.value;
        out.value += contrib;
        out.trace.emplace_back(t.name, contrib);
    }
    return out;
}

std::string explain(const BasisCombination& bc) {
    std::ostringstream os;
    os << "upper limit: " << (bc.upper.infinite ? std::string("inf") : fmt(bc.upper.b)) << "\n";
    double total = 0.0;
    for (const auto& t : bc.terms) {
        const double contrib = t.weight * t.value;
        total += contrib;
        os << "  " << fmt(t.weight) << " * " << t.name << " = " << fmt(t.weight) << " * "
           << fmt(t.value) << " -> " << fmt(contrib) << "\n";
    }
    os << "total = " << fmt(total) << "\n";
    return os.str();
}

}  // namespace logint::reduce
