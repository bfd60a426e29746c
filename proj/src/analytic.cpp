#include "matchfab/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace matchfab {

const char* to_string(Family f) {
    switch (f) {
        case Family::fractal: return "fractal";
        case Family::nonfractal: return "nonfractal";
        case Family::sierpinski: return "sierpinski";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "fractal") return Family::fractal;
    if (s == "nonfractal") return Family::nonfractal;
    if (s == "sierpinski") return Family::sierpinski;
    return std::nullopt;
}

namespace {

void require_generation(int g) {
    if (g < 1) throw DomainError("generation must be >= 1");
}

unsigned long to_ulong_exponent(const BigInt& e) {
    if (!e.fits_ulong_p() || e > 16'000'000)
        throw CapExceededError("power-of-two exponent too large to materialize: " + to_decimal(e));
    return e.get_ui();
}

} // namespace

FamilyCounts counts(Family family, int g) {
    require_generation(g);
    FamilyCounts fc;
    if (family == Family::sierpinski) {
        fc.n = 4 * pow_ui(3, g - 1);
        fc.e = 2 * pow_ui(3, g);
        return fc;
    }
    fc.n = 2 * (pow4(g) + 2) / 3;
    fc.e = pow4(g);
    for (int t = 1; t <= g; ++t) {
        fc.lv[t] = (t == 1) ? BigInt(4) : BigInt(2 * pow4(t - 1));
        fc.degree_of[t] = pow2(g - t + 1);
    }
    return fc;
}

MatchingSizeTriple fractal_matching_sizes(int g) {
    require_generation(g);
    MatchingSizeTriple t{0, 1, 2};
    for (int i = 1; i < g; ++i) {
        const auto br = fractal_size_recursion_branches(t);
        MatchingSizeTriple next;
        next.a = 2 * t.a + 2 * t.b;
        next.b = std::max(br.b_args[0], br.b_args[1]);
        next.c = std::max({br.c_args[0], br.c_args[1], br.c_args[2]});
        t = next;
    }
    const MatchingSizeTriple closed{(pow4(g) - 4) / 6, (pow4(g) + 2) / 6, (pow4(g) + 8) / 6};
    if (t.a != closed.a || t.b != closed.b || t.c != closed.c)
        throw InternalError("matching-size recursion disagrees with closed form at g=" +
                            std::to_string(g));
    return t;
}

SizeRecursionBranches fractal_size_recursion_branches(const MatchingSizeTriple& t) {
    SizeRecursionBranches br;
    br.b_args[0] = 2 * t.a + t.b + t.c;
    br.b_args[1] = t.a + 3 * t.b;
    br.c_args[0] = 2 * t.a + 2 * t.c;
    br.c_args[1] = 4 * t.b;
    br.c_args[2] = t.a + 2 * t.b + t.c;
    return br;
}

MatchingCountTriple fractal_matching_counts(int g) {
    require_generation(g);
    MatchingCountTriple t{1, 2, 2};
    for (int i = 1; i < g; ++i) {
        MatchingCountTriple next;
        next.phi = 4 * t.phi * t.phi * t.varphi * t.varphi;
        next.varphi = 4 * t.phi * t.phi * t.varphi * t.theta + 4 * t.phi * t.varphi * t.varphi * t.varphi;
        next.theta = 2 * t.phi * t.phi * t.theta * t.theta + 2 * t.varphi * t.varphi * t.varphi * t.varphi +
                     12 * t.phi * t.varphi * t.varphi * t.theta;
        t = next;
    }
    return t;
}

BigInt nonfractal_pm_exponent(int g) {
    require_generation(g);
    const BigInt raw = pow4(g) + 6 * g - 1;
    if (raw % 9 != 0)
        throw InternalError("(4^g + 6g - 1) not divisible by 9 at g=" + std::to_string(g));
    return raw / 9;
}

BigInt nonfractal_pm_count(int g) {
    return pow2(to_ulong_exponent(nonfractal_pm_exponent(g)));
}

BigInt sierpinski_pm_exponent(int g) {
    require_generation(g);
    if (g == 1)
        throw DomainError("sierpinski count formula is undefined at g=1; enumerate K4 instead");
    return 2 * pow_ui(3, g - 2) + 1;
}

BigInt sierpinski_pm_count(int g) {
    return pow2(to_ulong_exponent(sierpinski_pm_exponent(g)));
}

EntropyEstimate entropy_estimate(const BigInt& count, long long n) {
    if (sgn(count) <= 0) throw DomainError("entropy of a zero count");
    if (n <= 0 || n % 2 != 0) throw DomainError("entropy needs a positive even vertex count");
    EntropyEstimate est;
    est.log2_count = log2_approx(count);
    est.z = est.log2_count * std::log(2.0) / (static_cast<double>(n) / 2.0);
    return est;
}

Rational avg_distance_closed(Family family, int g) {
    require_generation(g);
    const BigInt p2 = pow2(g), p4 = pow4(g), p8 = pow_ui(8, g), p16 = pow_ui(16, g);
    if (family == Family::fractal) {
        const BigInt num = 22 * p2 * p16 + p8 * (21 * g + 42) + 27 * p4 + 98 * p2;
        const BigInt den = 42 * p16 + 105 * p4 + 42;
        return make_rational(num, den);
    }
    if (family == Family::nonfractal) {
        const BigInt num = 2 * (8 + 16 * p4 + 3 * p16 + 6 * g * p16);
        const BigInt den = 3 * (4 * p16 + 10 * p4 + 4);
        return make_rational(num, den);
    }
    throw DomainError("no closed-form average distance for this family");
}

Rational pearson_closed_fractal(int g) {
    require_generation(g);
    if (g == 1) throw DomainError("fractal Pearson coefficient is 0/0 at g=1 (regular graph)");
    const BigInt num = BigInt(g - 1) * (g - 1);
    const BigInt den = -3 * pow2(g) + g * g + 2 * g + 3;
    return make_rational(num, den);
}

std::map<long long, Rational> knn_closed(Family family, int g) {
    require_generation(g);
    if (g > 62) throw DomainError("degrees exceed 64-bit range beyond g=62");
    std::map<long long, Rational> out;
    if (family == Family::fractal) {
        out[2] = Rational(2 * g);
        for (int t = 1; t < g; ++t) out[1ll << (g - t + 1)] = Rational(2);
        return out;
    }
    if (family == Family::nonfractal) {
        for (int t = 1; t <= g; ++t) out[1ll << (g - t + 1)] = Rational(g + 1);
        return out;
    }
    throw DomainError("no closed-form knn map for this family");
}

} // namespace matchfab
