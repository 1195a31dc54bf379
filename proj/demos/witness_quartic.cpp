// Five red and five blue lines whose matched crossings sit on the green
// x-axis: the other 20 crossings lie on one exact quartic. Prints the
// canonical coefficients and writes an SVG of the whole scene.

#include <fstream>
#include <iostream>

#include "syzygy/syzygy.hpp"

using namespace syzygy;

int main() {
    auto L = [](int a, int b, int c) { return ProjLine(Rat(a), Rat(b), Rat(c)); };
    ColoredArrangement arr = arrangement_from_lines(
        {L(1, 0, 2), L(1, 0, 1), L(1, 0, 0), L(1, 0, -1), L(1, 0, -2)},
        {L(1, -1, 2), L(1, -1, 1), L(1, -1, 0), L(1, -1, -1), L(1, -1, -2)},
        L(0, 1, 0));

    PointSet pts = offgreen_points(arr);
    HomogPoly curve = construct_curve(arr);
    std::cout << "k = " << arr.k << ", crossings off the green line: " << pts.size()
              << "\n";
    std::cout << "unique degree-" << curve.degree() << " curve, coefficients in "
              << "decreasing x then y exponent order:\n ";
    for (const auto& c : curve.coeffs()) std::cout << " " << c;
    std::cout << "\n";

    int on_curve = 0;
    for (const auto& p : pts.points())
        if (curve.vanishes_at(p)) ++on_curve;
    std::cout << "exact vanishing at " << on_curve << " of " << pts.size()
              << " crossings\n";

    Viewport vp;
    vp.xmin = -4.5;
    vp.xmax = 4.5;
    vp.ymin = -4.5;
    vp.ymax = 4.5;
    std::ofstream("witness_quartic.svg") << render_scene(arr, curve, pts, vp);
    std::cout << "figure written to witness_quartic.svg\n";
    return 0;
}
