#ifndef FOLIATION_CORPUS_HPP
#define FOLIATION_CORPUS_HPP

#include "foliation/forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace foliation::corpus {

// lambda x dy - y dx
DiffForm linear(const Rational& lambda);
// x^(k+1) dy - y (1 + mu x^k) dx
DiffForm model_sn(int k, const Rational& mu);
// x^2 dy - (y + x) dx
DiffForm euler();
// (x/n - y^n) dx + n x y^(n-1) dy
DiffForm omega_n(int n);
// (y^2 - 1) dx - 2 y x^2 dy
DiffForm psi_pullback();
// x dy - y dx
DiffForm radial();
// x dy + y dx
DiffForm saddle();
// d(y^2 - x^3)
DiffForm cusp();
// df with f = x y (y^2 - 2 x^2): tangent cone points y = +-sqrt(2) x
DiffForm sqrt2_star();
// (y^2 - 2 x^2)(y dy - 3 x dx) + y^4 dx: the tangent cone points +-sqrt 2, +-sqrt 3 share one
// residual factor, and only the sqrt 2 pair is degenerate, so reduction splits the field
DiffForm sqrt_mixed();

struct Case {
    std::string name;
    DiffForm form;
    std::string note;
    // singular point analysed by the symbolic pipeline (the origin unless stated)
    Rational center_x = 0;
    Rational center_y = 0;

    // The form translated so that the center sits at the origin.
    DiffForm centered() const;
};

// Resolves names such as "linear", "model_sn", "omega_n" with parameters.
DiffForm by_name(const std::string& name, const std::map<std::string, std::string>& params = {});
std::vector<std::string> names();
// Every named case with its default parameters, plus the omega_n family for n = 1..5.
std::vector<Case> all_cases();

} // namespace foliation::corpus

#endif
