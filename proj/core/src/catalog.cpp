#include "hadamard/catalog.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hadamard {

namespace {

constexpr double kZeroTol = 1e-300;

double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

Complex int_pow(Complex z, std::size_t e) {
    Complex r(1.0, 0.0);
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

bool on_positive_cut(Complex z, double from) {
    // principal branch cut of log(1-z) mapped to the z-plane: [from, +inf)
    return std::abs(z.imag()) < 1e-12 && z.real() >= from - 1e-12;
}

}  // namespace

PointEvaluator partial_sum_evaluator(TruncatedGerm f) {
    PointEvaluator ev;
    ev.eval = [g = std::move(f)](Complex z) { return partial_sum(g, z); };
    return ev;
}

PointEvaluator delta_evaluator() {
    PointEvaluator ev;
    ev.eval = [](Complex z) { return 1.0 / (Complex(1.0, 0.0) - z); };
    ev.singular = {Complex(1.0, 0.0)};
    return ev;
}

RationalGerm::RationalGerm(Complex omega_, std::vector<Complex> pole_coeffs_,
                           std::vector<Complex> poly_part_)
    : omega(omega_), pole_coeffs(std::move(pole_coeffs_)), poly_part(std::move(poly_part_)) {
    if (std::abs(omega) < kZeroTol)
        throw InvalidParameters("catalog: rational germ needs a nonzero pole location");
    if (pole_coeffs.empty())
        throw InvalidParameters("catalog: rational germ needs at least one pole coefficient");
    if (std::abs(pole_coeffs.back()) < kZeroTol)
        throw InvalidParameters("catalog: rational germ has a vanishing top pole coefficient");
}

TruncatedGerm pole_coefficients(Complex omega, std::size_t j, std::size_t order) {
    if (j == 0) throw InvalidParameters("catalog: pole order must be at least 1");
    if (order == 0) throw InvalidParameters("catalog: truncation order must be at least 1");
    if (std::abs(omega) < kZeroTol)
        throw InvalidParameters("catalog: pole location must be nonzero");
    std::vector<Complex> out(order);
    // coeff_n = binom(n+j-1, j-1) * omega^(-n-j), built by the term ratio
    // (n+j)/((n+1)*omega) to avoid large intermediates.
    Complex c = 1.0 / int_pow(omega, j);
    for (std::size_t n = 0; n < order; ++n) {
        out[n] = c;
        c *= double(n + j) / (double(n + 1) * omega);
    }
    return TruncatedGerm(std::move(out));
}

TruncatedGerm expand(const RationalGerm& r, std::size_t order) {
    std::vector<Complex> out(order, Complex(0.0, 0.0));
    for (std::size_t j = 1; j <= r.pole_order(); ++j) {
        if (r.pole_coeffs[j - 1] == Complex(0.0, 0.0)) continue;
        TruncatedGerm p = pole_coefficients(r.omega, j, order);
        for (std::size_t n = 0; n < order; ++n) out[n] += r.pole_coeffs[j - 1] * p[n];
    }
    for (std::size_t n = 0; n < std::min(order, r.poly_part.size()); ++n)
        out[n] += r.poly_part[n];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm log_over_zeta_coefficients(std::size_t order) {
    return shifted_log_coefficients(1, order);
}

TruncatedGerm shifted_log_coefficients(std::size_t k, std::size_t order) {
    if (k == 0) throw InvalidParameters("catalog: shift must be at least 1");
    std::vector<Complex> out(order);
    for (std::size_t n = 0; n < order; ++n) out[n] = Complex(1.0 / double(n + k), 0.0);
    return TruncatedGerm(std::move(out));
}

TruncatedGerm geometric_ladder_inverse(std::size_t order) {
    std::vector<Complex> out(order);
    out[0] = Complex(1.0, 0.0);
    for (std::size_t n = 1; n < order; ++n)
        out[n] = Complex(1.0 / (1.0 - std::ldexp(1.0, -int(n))), 0.0);
    return TruncatedGerm(std::move(out));
}

namespace {

void validate_borel_mayer(Complex q, Complex p) {
    if (std::abs(q) >= 1.0)
        throw InvalidParameters("catalog: boundary germ needs |q| < 1");
    if (std::abs(std::abs(p) - 1.0) > 1e-12)
        throw InvalidParameters("catalog: boundary germ needs |p| = 1");
    // Reject p a root of unity: |p^k - 1| < 1e-9 for some k <= 10^6.  The
    // angle of p^k is accumulated in extended precision so the test is not
    // swamped by drift.
    const long double theta = std::atan2((long double)p.imag(), (long double)p.real());
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    long double angle = 0.0L;
    for (std::size_t k = 1; k <= 1000000; ++k) {
        angle += theta;
        if (angle > std::numbers::pi_v<long double>) angle -= two_pi;
        if (angle < -std::numbers::pi_v<long double>) angle += two_pi;
        long double dist = 2.0L * std::abs(std::sin(angle / 2.0L));
        if (dist < 1e-9L)
            throw InvalidParameters("catalog: rotation p is a root of unity (order " +
                                    std::to_string(k) + " within 1e-9)");
    }
}

}  // namespace

TruncatedGerm borel_mayer_coefficients(Complex q, Complex p, std::size_t order) {
    validate_borel_mayer(q, p);
    std::vector<Complex> out(order);
    Complex qpn = q;  // q * p^n, renormalized onto the circle of radius |q|
    const double qabs = std::abs(q);
    for (std::size_t n = 0; n < order; ++n) {
        out[n] = 1.0 / (Complex(1.0, 0.0) - qpn);
        qpn *= p;
        double m = std::abs(qpn);
        if (m > 0.0) qpn *= qabs / m;
    }
    return TruncatedGerm(std::move(out));
}

TruncatedGerm entire_correction(const TruncatedGerm& b, const TruncatedGerm& h) {
    std::size_t order = std::min(b.order(), h.order());
    std::vector<Complex> out(order);
    for (std::size_t n = 0; n < order; ++n) {
        Complex den = Complex(1.0, 0.0) + h[n] * b[n];
        if (std::abs(den) < kZeroTol) throw ResonantCoefficient("catalog", n);
        out[n] = h[n] * b[n] * b[n] / den;
    }
    return TruncatedGerm(std::move(out));
}

RationalGerm pole_hadamard_pole(const RationalGerm& f0, const RationalGerm& g0) {
    if (!f0.poly_part.empty() || !g0.poly_part.empty())
        throw InvalidParameters("catalog: pole-pole product needs empty polynomial parts");
    if (std::abs(f0.omega - Complex(1.0, 0.0)) > 1e-12)
        throw InvalidParameters("catalog: pole-pole product needs the first factor's pole at 1");
    const std::size_t M = f0.pole_order();
    const std::size_t N = g0.pole_order();
    const Complex omega = g0.omega;
    std::vector<Complex> c(M + N - 1, Complex(0.0, 0.0));
    // Residue calculus collapses the product to derivatives of
    // z^(j-1) / (omega-z)^k; re-expanding those in powers of 1/(omega-z)
    // leaves integer binomial weights only.
    for (std::size_t j = 1; j <= M; ++j) {
        if (f0.pole_coeffs[j - 1] == Complex(0.0, 0.0)) continue;
        for (std::size_t k = 1; k <= N; ++k) {
            if (g0.pole_coeffs[k - 1] == Complex(0.0, 0.0)) continue;
            Complex ab = f0.pole_coeffs[j - 1] * g0.pole_coeffs[k - 1];
            for (std::size_t s = 0; s < std::min(j, k); ++s) {
                double w = binom(j - 1, s) * binom(k - s + j - 2, j - 1);
                double sign = (s % 2 == 0) ? 1.0 : -1.0;
                c[k + j - 2 - s] += ab * sign * w * int_pow(omega, j - 1 - s);
            }
        }
    }
    return RationalGerm(omega, std::move(c));
}

Complex golden_rotation() {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * phi);
}

// ---- CatalogGerm -----------------------------------------------------------

CatalogGerm CatalogGerm::delta_germ() {
    CatalogGerm g(Kind::delta);
    g.name_ = "delta";
    return g;
}

CatalogGerm CatalogGerm::pole(Complex omega, std::size_t j) {
    if (j == 0) throw InvalidParameters("catalog: pole order must be at least 1");
    if (std::abs(omega) < kZeroTol)
        throw InvalidParameters("catalog: pole location must be nonzero");
    CatalogGerm g(Kind::pole);
    g.name_ = "pole";
    g.omega_ = omega;
    g.j_ = j;
    return g;
}

CatalogGerm CatalogGerm::log_over_zeta() {
    CatalogGerm g(Kind::log_over_zeta);
    g.name_ = "log";
    return g;
}

CatalogGerm CatalogGerm::shifted_log(std::size_t k) {
    if (k == 0) throw InvalidParameters("catalog: shift must be at least 1");
    CatalogGerm g(Kind::shifted_log);
    g.name_ = "shifted-log";
    g.j_ = k;
    return g;
}

CatalogGerm CatalogGerm::ladder_f() {
    CatalogGerm g(Kind::ladder_f);
    g.name_ = "ladder-F";
    return g;
}

CatalogGerm CatalogGerm::geometric_ladder() {
    CatalogGerm g(Kind::geometric_ladder);
    g.name_ = "ladder";
    return g;
}

CatalogGerm CatalogGerm::borel_mayer(Complex q, Complex p) {
    validate_borel_mayer(q, p);
    CatalogGerm g(Kind::borel_mayer);
    g.name_ = "bm92";
    g.q_ = q;
    g.p_ = p;
    return g;
}

CatalogGerm CatalogGerm::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty())
        throw InvalidParameters("catalog: polynomial needs at least one coefficient");
    CatalogGerm g(Kind::polynomial);
    g.name_ = "poly";
    g.poly_ = std::move(coeffs);
    return g;
}

CatalogGerm CatalogGerm::from_rational(RationalGerm r, std::string name) {
    CatalogGerm g(Kind::rational);
    g.name_ = std::move(name);
    g.omega_ = r.omega;
    g.rational_pole_coeffs_ = std::move(r.pole_coeffs);
    g.poly_ = std::move(r.poly_part);
    return g;
}

TruncatedGerm CatalogGerm::coefficients(std::size_t order) const {
    switch (kind_) {
        case Kind::delta:
            return delta(order);
        case Kind::pole:
            return pole_coefficients(omega_, j_, order);
        case Kind::log_over_zeta:
            return log_over_zeta_coefficients(order);
        case Kind::shifted_log:
            return shifted_log_coefficients(j_, order);
        case Kind::ladder_f: {
            std::vector<Complex> out(order);
            out[0] = Complex(1.0, 0.0);
            for (std::size_t n = 1; n < order; ++n)
                out[n] = Complex(1.0 - std::ldexp(1.0, -int(n)), 0.0);
            return TruncatedGerm(std::move(out));
        }
        case Kind::geometric_ladder:
            return geometric_ladder_inverse(order);
        case Kind::borel_mayer:
            return borel_mayer_coefficients(q_, p_, order);
        case Kind::polynomial: {
            std::vector<Complex> out(order, Complex(0.0, 0.0));
            for (std::size_t n = 0; n < std::min(order, poly_.size()); ++n) out[n] = poly_[n];
            return TruncatedGerm(std::move(out));
        }
        case Kind::rational:
            return expand(RationalGerm(omega_, rational_pole_coeffs_, poly_), order);
    }
    throw InvalidParameters("catalog: unknown germ kind");
}

PointEvaluator CatalogGerm::evaluator() const {
    PointEvaluator ev;
    switch (kind_) {
        case Kind::delta:
            return delta_evaluator();
        case Kind::pole: {
            Complex omega = omega_;
            std::size_t j = j_;
            ev.eval = [omega, j](Complex z) { return 1.0 / int_pow(omega - z, j); };
            ev.singular = {omega};
            break;
        }
        case Kind::log_over_zeta:
        case Kind::shifted_log: {
            std::size_t k = (kind_ == Kind::log_over_zeta) ? 1 : j_;
            ev.eval = [k](Complex z) {
                if (std::abs(z) <= 0.1) {
                    // series sum_{n} z^n/(n+k); closed form cancels badly here
                    Complex acc(0.0, 0.0), zp(1.0, 0.0);
                    for (std::size_t n = 0; n < 48; ++n) {
                        acc += zp / double(n + k);
                        zp *= z;
                    }
                    return acc;
                }
                Complex num = -std::log(Complex(1.0, 0.0) - z);
                Complex zp(1.0, 0.0);
                for (std::size_t m = 1; m < k; ++m) {
                    zp *= z;
                    num -= zp / double(m);
                }
                return num / (zp * z);
            };
            ev.singular = {Complex(1.0, 0.0)};
            ev.in_domain = [](Complex z) { return !on_positive_cut(z, 1.0); };
            break;
        }
        case Kind::ladder_f: {
            ev.eval = [](Complex z) {
                return Complex(1.0, 0.0) + 1.0 / (Complex(1.0, 0.0) - z) -
                       2.0 / (Complex(2.0, 0.0) - z);
            };
            ev.singular = {Complex(1.0, 0.0), Complex(2.0, 0.0)};
            break;
        }
        case Kind::geometric_ladder: {
            ev.eval = [](Complex z) {
                Complex acc(1.0, 0.0);
                double zabs = std::abs(z);
                for (int m = 0; m < 1200; ++m) {
                    double den = std::ldexp(1.0, m);
                    Complex term = z / (Complex(den, 0.0) - z);
                    acc += term;
                    if (zabs / (den - std::min(zabs, den * 0.5)) <
                        1e-16 * std::max(1.0, std::abs(acc)))
                        break;
                }
                return acc;
            };
            for (int m = 0; m <= 40; ++m) ev.singular.push_back(Complex(std::ldexp(1.0, m), 0.0));
            break;
        }
        case Kind::borel_mayer: {
            Complex q = q_, p = p_;
            ev.eval = [q, p](Complex z) {
                // sum_m q^m / (1 - p^m z), valid inside the unit disk
                Complex acc(0.0, 0.0), qm(1.0, 0.0), pm(1.0, 0.0);
                double zabs = std::abs(z);
                for (int m = 0; m < 20000; ++m) {
                    acc += qm / (Complex(1.0, 0.0) - pm * z);
                    if (std::abs(qm) / (1.0 - zabs) < 1e-16 * std::max(1.0, std::abs(acc)))
                        break;
                    qm *= q;
                    pm *= p;
                    double mag = std::abs(pm);
                    if (mag > 0.0) pm /= mag;
                }
                return acc;
            };
            ev.in_domain = [](Complex z) { return std::abs(z) < 0.995; };
            break;
        }
        case Kind::polynomial: {
            TruncatedGerm g(poly_);
            return partial_sum_evaluator(std::move(g));
        }
        case Kind::rational:
            return rational_evaluator(RationalGerm(omega_, rational_pole_coeffs_, poly_));
    }
    return ev;
}

PointEvaluator rational_evaluator(const RationalGerm& r) {
    PointEvaluator ev;
    RationalGerm copy = r;
    ev.eval = [copy](Complex z) {
        Complex acc(0.0, 0.0);
        Complex inv = 1.0 / (copy.omega - z);
        Complex power = inv;
        for (std::size_t j = 1; j <= copy.pole_order(); ++j) {
            acc += copy.pole_coeffs[j - 1] * power;
            power *= inv;
        }
        Complex zp(1.0, 0.0);
        for (const Complex& c : copy.poly_part) {
            acc += c * zp;
            zp *= z;
        }
        return acc;
    };
    ev.singular = {r.omega};
    return ev;
}

// ---- germ mini-language ----------------------------------------------------

namespace {

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InvalidParameters("catalog: bad numeric value for key '" + key + "': " + text);
    }
}

struct SpecArgs {
    std::vector<std::pair<std::string, std::string>> kv;

    bool has(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return true;
        return false;
    }
    std::string get(const std::string& key, const std::string& fallback) const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        return fallback;
    }
    void allow_only(std::initializer_list<const char*> keys) const {
        for (const auto& [k, v] : kv) {
            bool ok = false;
            for (const char* allowed : keys)
                if (k == allowed) ok = true;
            if (!ok) throw InvalidParameters("catalog: unknown key '" + k + "' in germ spec");
        }
    }
};

SpecArgs split_spec_args(const std::string& rest) {
    SpecArgs args;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? rest.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidParameters("catalog: germ spec entry '" + item + "' is not key=value");
        args.kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return args;
}

}  // namespace

CatalogGerm parse_germ_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    SpecArgs args =
        colon == std::string::npos ? SpecArgs{} : split_spec_args(spec.substr(colon + 1));

    if (name == "delta") {
        args.allow_only({});
        return CatalogGerm::delta_germ();
    }
    if (name == "example1") {
        args.allow_only({});
        return CatalogGerm::from_rational(
            RationalGerm(Complex(1.0, 0.0), {Complex(0.0, 0.0), Complex(1.0, 0.0)}), "example1");
    }
    if (name == "example2") {
        args.allow_only({});
        return CatalogGerm::from_rational(
            RationalGerm(Complex(1.0, 0.0),
                         {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0)}),
            "example2");
    }
    if (name == "ladder") {
        args.allow_only({});
        return CatalogGerm::geometric_ladder();
    }
    if (name == "ladder-F") {
        args.allow_only({});
        return CatalogGerm::ladder_f();
    }
    if (name == "log") {
        args.allow_only({});
        return CatalogGerm::log_over_zeta();
    }
    if (name == "shifted-log") {
        args.allow_only({"k"});
        double k = parse_number("k", args.get("k", "1"));
        if (k < 1.0 || k != std::floor(k))
            throw InvalidParameters("catalog: shifted-log needs integer k >= 1");
        return CatalogGerm::shifted_log(std::size_t(k));
    }
    if (name == "pole") {
        args.allow_only({"omega", "im", "j"});
        double re = parse_number("omega", args.get("omega", "1"));
        double im = args.has("im") ? parse_number("im", args.get("im", "0")) : 0.0;
        double j = parse_number("j", args.get("j", "1"));
        if (j < 1.0 || j != std::floor(j))
            throw InvalidParameters("catalog: pole needs integer j >= 1");
        return CatalogGerm::pole(Complex(re, im), std::size_t(j));
    }
    if (name == "bm92") {
        args.allow_only({"q", "phi"});
        double q = parse_number("q", args.get("q", "0.5"));
        std::string phi_text = args.get("phi", "golden");
        Complex p = phi_text == "golden"
                        ? golden_rotation()
                        : std::polar(1.0, 2.0 * std::numbers::pi * parse_number("phi", phi_text));
        return CatalogGerm::borel_mayer(Complex(q, 0.0), p);
    }
    throw InvalidParameters("catalog: unknown germ name '" + name + "'");
}

}  // namespace hadamard
