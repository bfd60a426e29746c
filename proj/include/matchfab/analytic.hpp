#pragma once

#include <map>
#include <optional>
#include <string>

#include "matchfab/exact.hpp"

namespace matchfab {

enum class Family { fractal, nonfractal, sierpinski };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct FamilyCounts {
    BigInt n;
    BigInt e;
    std::map<int, BigInt> lv;        // creation iteration -> vertex count
    std::map<int, BigInt> degree_of; // creation iteration -> degree
};

// Vertex/edge/degree bookkeeping formulas.  For the two quadrangle families:
// n = (2/3)(4^g + 2), e = 4^g, lv(1) = 4, lv(t) = 2*4^{t-1} for t > 1,
// degree_of(t) = 2^{g-t+1}.  For the Sierpinski family only n and e are
// populated (n = 4*3^{g-1}, e = 2*3^g, 3-regular).
FamilyCounts counts(Family family, int g);

// Maximum-matching sizes of F_g minus {v1,v2}, minus {v1}, and intact.
struct MatchingSizeTriple {
    BigInt a; // F_g \ {v1,v2}
    BigInt b; // F_g \ {v1}
    BigInt c; // F_g
};

// Computed both by iterating the literal max-recursion from (0,1,2) and by
// the closed forms (4^g-4)/6, (4^g+2)/6, (4^g+8)/6; throws InternalError if
// the two routes disagree.
MatchingSizeTriple fractal_matching_sizes(int g);

// For tests: the branch values of one recursion step.
struct SizeRecursionBranches {
    BigInt b_args[2]; // 2a+b+c, a+3b
    BigInt c_args[3]; // 2a+2c, 4b, a+2b+c
};
SizeRecursionBranches fractal_size_recursion_branches(const MatchingSizeTriple& t);

// Maximum-matching counts of the same three graphs.
struct MatchingCountTriple {
    BigInt phi;    // F_g \ {v1,v2}
    BigInt varphi; // F_g \ {v1}
    BigInt theta;  // F_g
};

// phi_{g+1} = 4 phi^2 varphi^2,
// varphi_{g+1} = 4 phi^2 varphi theta + 4 phi varphi^3,
// theta_{g+1} = 2 phi^2 theta^2 + 2 varphi^4 + 12 phi varphi^2 theta,
// from (1, 2, 2).
MatchingCountTriple fractal_matching_counts(int g);

// Exponent (4^g + 6g - 1)/9 of psi(H_g) = 2^exponent; throws InternalError
// if the exponent is not an integer.
BigInt nonfractal_pm_exponent(int g);
BigInt nonfractal_pm_count(int g);

// Exponent 2*3^{g-2} + 1 of psi(S++_g); DomainError at g = 1, whose true
// count is 3 and lies outside the formula's domain.
BigInt sierpinski_pm_exponent(int g);
BigInt sierpinski_pm_count(int g);

struct EntropyEstimate {
    double log2_count = 0.0; // exact when the count is a power of two
    double z = 0.0;          // ln(count) / (n/2)
};

EntropyEstimate entropy_estimate(const BigInt& count, long long n);

// Exact closed-form average distance (fractal and nonfractal families only).
Rational avg_distance_closed(Family family, int g);

// (g-1)^2 / (-3*2^g + g^2 + 2g + 3); DomainError at g = 1 (0/0 on C4).
Rational pearson_closed_fractal(int g);

// Average neighbor degree per degree class.  Fractal: 2g at d = 2, else 2.
// Nonfractal: constant g+1.
std::map<long long, Rational> knn_closed(Family family, int g);

} // namespace matchfab
