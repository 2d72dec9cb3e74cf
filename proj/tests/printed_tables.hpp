#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "octoforms/exterior.hpp"

// Printed Kähler forms of J_ab for the spin9 and quaternionic systems.
// Tokens are signed index pairs; a trailing ' on the second index of a pair
// shifts it by 8. For the unprimed table `mirror` is the sign of the copy of
// the same expression with both indices shifted by 8.
struct PrintedForm {
    int a, b;
    const char* terms;
    int mirror;
};

inline const std::vector<PrintedForm>& printed_psi() {
    static const std::vector<PrintedForm> t = {
        {1, 2, "-12 +34 +56 -78", -1}, {1, 3, "-13 -24 +57 +68", -1}, {1, 4, "-14 +23 +58 -67", -1},
        {1, 5, "-15 -26 -37 -48", -1}, {1, 6, "-16 +25 -38 +47", -1}, {1, 7, "-17 +28 +35 -46", -1},
        {1, 8, "-18 -27 +36 +45", -1}, {2, 3, "-14 +23 -58 +67", 1},  {2, 4, "+13 +24 +57 +68", 1},
        {2, 5, "-16 +25 +38 -47", 1},  {2, 6, "+15 +26 -37 -48", 1},  {2, 7, "+18 +27 +36 +45", 1},
        {2, 8, "-17 +28 -35 +46", 1},  {3, 4, "-12 +34 -56 +78", 1},  {3, 5, "-17 -28 +35 +46", 1},
        {3, 6, "-18 +27 +36 -45", 1},  {3, 7, "+15 -26 +37 -48", 1},  {3, 8, "+16 +25 +38 +47", 1},
        {4, 5, "-18 +27 -36 +45", 1},  {4, 6, "+17 +28 +35 +46", 1},  {4, 7, "-16 -25 +38 +47", 1},
        {4, 8, "+15 -26 -37 +48", 1},  {5, 6, "-12 -34 +56 +78", 1},  {5, 7, "-13 +24 +57 -68", 1},
        {5, 8, "-14 -23 +58 +67", 1},  {6, 7, "+14 +23 +58 +67", 1},  {6, 8, "-13 +24 -57 +68", 1},
        {7, 8, "+12 +34 +56 +78", 1},
        {1, 9, "-11' -22' -33' -44' -55' -66' -77' -88'", 0},
        {2, 9, "-12' +21' +34' -43' +56' -65' -78' +87'", 0},
        {3, 9, "-13' -24' +31' +42' +57' +68' -75' -86'", 0},
        {4, 9, "-14' +23' -32' +41' +58' -67' +76' -85'", 0},
        {5, 9, "-15' -26' -37' -48' +51' +62' +73' +84'", 0},
        {6, 9, "-16' +25' -38' +47' -52' +61' -74' +83'", 0},
        {7, 9, "-17' +28' +35' -46' -53' +64' +71' -82'", 0},
        {8, 9, "-18' -27' +36' +45' -54' -63' +72' +81'", 0},
    };
    return t;
}

inline const std::vector<PrintedForm>& printed_theta() {
    static const std::vector<PrintedForm> t = {
        {1, 2, "-12 +34 +56 -78", 0}, {1, 3, "-13 -24 +57 +68", 0}, {1, 4, "-14 +23 +58 -67", 0},
        {2, 3, "-14 +23 -58 +67", 0}, {2, 4, "+13 +24 +57 +68", 0}, {3, 4, "-12 +34 -56 +78", 0},
        {1, 5, "-15 -26 -37 -48", 0}, {2, 5, "-16 +25 +38 -47", 0}, {3, 5, "-17 -28 +35 +46", 0},
        {4, 5, "-18 +27 -36 +45", 0},
    };
    return t;
}

inline octoforms::Multivector parse_printed(std::size_t n, const PrintedForm& f) {
    using octoforms::Multivector;
    Multivector out(n);
    std::istringstream in(f.terms);
    std::string tok;
    while (in >> tok) {
        const int sign = tok[0] == '-' ? -1 : 1;
        const std::size_t i = static_cast<std::size_t>(tok[1] - '0');
        std::size_t j = static_cast<std::size_t>(tok[2] - '0');
        if (tok.size() > 3 && tok[3] == '\'') j += 8;
        out += Multivector::monomial(n, {i, j}, sign);
        if (f.mirror != 0) out += Multivector::monomial(n, {i + 8, j + 8}, sign * f.mirror);
    }
    return out;
}
