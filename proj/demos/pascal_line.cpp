// Pascal's hexagram on the conic xz = y^2: six points, three opposite-edge
// crossings, one exactly collinear answer. Also shows the symmetric hexagon
// whose Pascal line is the line at infinity.

#include <iostream>

#include "syzygy/syzygy.hpp"

using namespace syzygy;

namespace {

void show_line(const char* what, const ProjLine& l) {
    const auto& c = l.coeffs();
    std::cout << what << ": [" << c[0] << " : " << c[1] << " : " << c[2] << "]\n";
}

}  // namespace

int main() {
    Conic conic = Conic::standard();

    std::vector<ProjPoint> hexagon;
    for (int t : {0, 2, 4, 1, 3, 5}) hexagon.push_back(conic_point(Rat(t)));
    show_line("pascal line of [t^2 : t : 1], t = 0,2,4,1,3,5", pascal_check(hexagon, conic));

    std::vector<ProjPoint> symmetric;
    for (int t : {-1, -2, -3, 1, 3, 2}) symmetric.push_back(conic_point(Rat(t)));
    show_line("opposite edges parallel, so the line at infinity",
              pascal_check(symmetric, conic));

    // Dual statement: the six tangents at the first hexagon's points are
    // concurrent after polarity.
    std::vector<ProjLine> tangents;
    for (const auto& p : hexagon) tangents.push_back(conic.polar(p));
    ProjPoint common = brianchon_check(tangents, conic);
    const auto& c = common.coords();
    std::cout << "brianchon point of the six tangents: [" << c[0] << " : " << c[1]
              << " : " << c[2] << "]\n";

    // A hexagon inscribed with alternating edge colors carries the same
    // line as the unique curve through its off-conic crossings.
    Rng rng = trial_rng(6, 0);
    KatzInstance inst = katz_instance(3, rng);
    HomogPoly curve = katz_check(inst.red, inst.blue, conic);
    const auto& v = inst.vertices;
    ProjLine pascal = pascal_check({v[0], v[2], v[4], v[1], v[3], v[5]}, conic);
    std::cout << "sampled hexagon: degree-" << curve.degree()
              << " curve through the 3 off-conic crossings "
              << (proportional(curve, HomogPoly::from_line(pascal)) ? "equals"
                                                                    : "differs from")
              << " its pascal line\n";
    return 0;
}
