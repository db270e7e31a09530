#include "legendre/quadratic_forms.hpp"

#include <limits>
#include <string>

#include "legendre/least_numbers.hpp"

namespace legendre {

namespace {

i64 narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw OverflowError(std::string(what) + ": result exceeds 64 bits");
    return static_cast<i64>(v);
}

// floor(a / b) for b > 0
i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

struct WideForm {
    i128 A, B, C;
};

struct WideTransform {
    i128 alpha = 1, beta = 0, gamma = 0, delta = 1;

    // this * [[a, b], [c, d]]
    void compose(i128 a, i128 b, i128 c, i128 d) {
        const WideTransform m = *this;
        alpha = m.alpha * a + m.beta * c;
        beta = m.alpha * b + m.beta * d;
        gamma = m.gamma * a + m.delta * c;
        delta = m.gamma * b + m.delta * d;
    }
};

}  // namespace

i64 BinaryQuadraticForm::discriminant() const {
    return narrow(static_cast<i128>(B) * B - static_cast<i128>(4) * A * C, "discriminant");
}

bool BinaryQuadraticForm::is_positive_definite() const {
    return A > 0 && static_cast<i128>(B) * B - static_cast<i128>(4) * A * C < 0;
}

bool BinaryQuadraticForm::is_reduced() const noexcept {
    const i64 absB = B < 0 ? -B : B;
    if (!(absB <= A && A <= C)) return false;
    if ((absB == A || A == C) && B < 0) return false;
    return true;
}

std::pair<i64, i64> UnimodularTransform::apply(i64 x, i64 y) const {
    return {narrow(static_cast<i128>(alpha) * x + static_cast<i128>(beta) * y, "transform"),
            narrow(static_cast<i128>(gamma) * x + static_cast<i128>(delta) * y, "transform")};
}

i64 evaluate_form(const BinaryQuadraticForm& f, i64 x, i64 y) {
    i128 total = 0;
    auto add = [&](i64 coeff, i64 u, i64 v) {
        i128 t;
        if (__builtin_mul_overflow(static_cast<i128>(u) * v, static_cast<i128>(coeff), &t) ||
            __builtin_add_overflow(total, t, &total))
            throw OverflowError("evaluate_form: value exceeds 64 bits");
    };
    add(f.A, x, x);
    add(f.B, x, y);
    add(f.C, y, y);
    return narrow(total, "evaluate_form");
}

BinaryQuadraticForm substitute(const BinaryQuadraticForm& f, const UnimodularTransform& t) {
    const i128 A = f.A, B = f.B, C = f.C;
    const i128 a = t.alpha, b = t.beta, c = t.gamma, d = t.delta;
    return {narrow(A * a * a + B * a * c + C * c * c, "substitute"),
            narrow(2 * A * a * b + B * (a * d + b * c) + 2 * C * c * d, "substitute"),
            narrow(A * b * b + B * b * d + C * d * d, "substitute")};
}

Reduction reduce_form(const BinaryQuadraticForm& f) {
    if (!f.is_positive_definite())
        throw std::invalid_argument("reduce_form: form (" + std::to_string(f.A) + ", " +
                                    std::to_string(f.B) + ", " + std::to_string(f.C) +
                                    ") is not positive definite");
    WideForm w{f.A, f.B, f.C};
    WideTransform m;
    for (;;) {
        // Translation x -> x + t y puts B into (-A, A].
        const i128 t = floor_div(w.A - w.B, 2 * w.A);
        if (t != 0) {
            w.C = w.A * t * t + w.B * t + w.C;
            w.B = w.B + 2 * w.A * t;
            m.compose(1, t, 0, 1);
        }
        if (w.A > w.C || (w.A == w.C && w.B < 0)) {
            // (x, y) -> (-y, x)
            w = {w.C, -w.B, w.A};
            m.compose(0, -1, 1, 0);
            continue;
        }
        break;
    }
    Reduction r;
    r.form = {narrow(w.A, "reduce_form"), narrow(w.B, "reduce_form"), narrow(w.C, "reduce_form")};
    r.transform = {narrow(m.alpha, "reduce_form"), narrow(m.beta, "reduce_form"),
                   narrow(m.gamma, "reduce_form"), narrow(m.delta, "reduce_form")};
    return r;
}

bool is_representable(u64 q, i64 d) { return sqrt_mod_4q(d, q).has_value(); }

Representation represent(u64 q, u64 d) {
    if (d == 0 || d > static_cast<u64>(std::numeric_limits<i64>::max()))
        throw std::invalid_argument("represent: d must be in [1, 2^63)");
    const auto root = sqrt_mod_4q(-static_cast<i64>(d), q);
    if (!root)
        throw NotRepresentable("represent: -" + std::to_string(d) + " is not a square modulo 4*" +
                               std::to_string(q));
    // Roots pair up as b, b + 2q; the least one lies in [0, 2q).
    const u64 b = *root % (2 * q);
    const u128 c = (static_cast<u128>(b) * b + d) / (4 * static_cast<u128>(q));
    const BinaryQuadraticForm start{narrow(static_cast<i128>(q), "represent"),
                                    narrow(static_cast<i128>(b), "represent"),
                                    narrow(static_cast<i128>(c), "represent")};
    const Reduction red = reduce_form(start);
    // start represents q at (1, 0); pull that point back through the transform.
    auto [x, y] = red.transform.inverse().apply(1, 0);
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return {q, d, red.form, x, y};
}

AlmostSquare almost_square_decomposition(u64 q, u64 d) {
    const Representation rep = represent(q, d);
    const i128 X = 2 * static_cast<i128>(rep.form.A) * rep.x + static_cast<i128>(rep.form.B) * rep.y;
    return {q,
            narrow(4 * static_cast<i128>(rep.form.A), "almost_square"),
            static_cast<i64>(d),
            narrow(X < 0 ? -X : X, "almost_square"),
            rep.y < 0 ? -rep.y : rep.y,
            rep};
}

DiscriminantResult least_discriminant(u64 q, u64 bound, u64 cap) {
    if (q < 2) throw std::invalid_argument("least_discriminant: q must be at least 2");
    if (q > (kMaxInput >> 2)) throw std::invalid_argument("least_discriminant: 4q exceeds 63 bits");
    DiscriminantResult out{q, bound, std::nullopt, std::nullopt, {}};

    const Factorization fq = factorize(q);
    Factorization f4q = fq;
    f4q.value = 4 * q;
    if (!f4q.factors.empty() && f4q.factors.front().prime == 2)
        f4q.factors.front().exponent += 2;
    else
        f4q.factors.insert(f4q.factors.begin(), PrimePower{2, 2});

    for (u64 d = 1; d <= bound; ++d) {
        if (sqrt_mod(reduce_signed(-static_cast<i64>(d), f4q.value), f4q)) {
            out.least = d;
            break;
        }
    }

    u64 p0 = 7;
    while (!is_prime(p0) || q % p0 == 0) p0 += 8;
    u64 odd_radical = 1;
    std::vector<u64> odd_primes;
    for (const auto& pp : fq.factors) {
        if (pp.prime == 2) continue;
        odd_radical *= pp.prime;
        odd_primes.push_back(pp.prime);
    }
    const SquarefreeModulus r(odd_radical);
    // Want (d/p) = (-1/p) at each odd p | q, with d = d0 p0.
    SignVector target{0, r.k()};
    for (unsigned i = 0; i < odd_primes.size(); ++i) {
        const u64 p = odd_primes[i];
        const int want = (p % 4 == 1 ? 1 : -1) * jacobi_reduced(p0 % p, p);
        if (want == -1) target.bits |= u64{1} << i;
    }
    SearchOptions opts;
    opts.cap = cap;
    const auto d0 = least_n_for_sign(r, target, opts);
    if (!d0) {
        out.constructive_failure = "no d0 = 1 (mod 8) with the prescribed symbols below cap " +
                                   std::to_string(cap);
        return out;
    }
    const u128 d = static_cast<u128>(*d0) * p0;
    if (d > static_cast<u128>(std::numeric_limits<i64>::max())) {
        out.constructive_failure = "d0 * p0 exceeds 63 bits";
        return out;
    }
    if (!sqrt_mod(reduce_signed(-static_cast<i64>(d), f4q.value), f4q)) {
        out.constructive_failure = "constructed d = " + std::to_string(static_cast<u64>(d)) +
                                   " is not representable";
        return out;
    }
    out.constructive = ConstructiveDiscriminant{p0, *d0, static_cast<u64>(d)};
    return out;
}

}  // namespace legendre
