#include "loopnt/svg.hpp"

#include <cmath>
#include <sstream>

namespace loopnt {

namespace {

double to_double(const Rational& r) {
    // Presentation-only: scale num/den into range, then divide as doubles.
    return r.num().convert_to<double>() / r.den().convert_to<double>();
}

double to_double(const QuadNum& q) {
    return to_double(q.rat_part()) +
           to_double(q.quad_part()) * std::sqrt(q.radicand().convert_to<double>());
}

struct Pt {
    double x, y;
};

Pt unit(const QuadVec2& v) {
    double x = to_double(v.x1), y = to_double(v.x2);
    double n = std::hypot(x, y);
    return {x / n, y / n};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << v;
    return os.str();
}

} // namespace

std::string render_svg(const LoopSpec& spec, const LoopAnalysis& analysis) {
    const double view = 5.0;  // world half-extent
    const double size = 480.0;
    const double scale = size / (2 * view);
    const double big = 4 * view; // rays drawn past the edge; the viewBox clips

    std::ostringstream svg;
    auto px = [&](double wx) { return size / 2 + wx * scale; };
    auto py = [&](double wy) { return size / 2 - wy * scale; };

    auto line = [&](Pt a, Pt b, const std::string& style) {
        svg << "  <line x1=\"" << fmt(px(a.x)) << "\" y1=\"" << fmt(py(a.y)) << "\" x2=\""
            << fmt(px(b.x)) << "\" y2=\"" << fmt(py(b.y)) << "\" " << style << "/>\n";
    };

    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\" stroke=\"#ccc\"/>\n";
    // axes
    line({-view, 0}, {view, 0}, "stroke=\"#bbb\" stroke-width=\"1\"");
    line({0, -view}, {0, view}, "stroke=\"#bbb\" stroke-width=\"1\"");

    const NTSet& nt = analysis.nt;

    // NT region shading
    if (nt.kind() == NTSet::Kind::Sector) {
        Pt r = unit(nt.right());
        Pt l = unit(nt.left());
        // Fan from the origin: right ray, arc of far corners, left ray. The
        // polygon extends past the viewBox and is clipped by the renderer.
        double a0 = std::atan2(r.y, r.x);
        double a1 = std::atan2(l.y, l.x);
        while (a1 <= a0)
            a1 += 2 * M_PI;
        svg << "  <polygon fill=\"#8fb8e8\" fill-opacity=\"0.45\" stroke=\"none\" points=\""
            << fmt(px(0)) << "," << fmt(py(0));
        svg << " " << fmt(px(r.x * big)) << "," << fmt(py(r.y * big));
        for (double a = a0 + 0.15; a < a1; a += 0.15)
            svg << " " << fmt(px(std::cos(a) * big * 1.5)) << ","
                << fmt(py(std::sin(a) * big * 1.5));
        svg << " " << fmt(px(l.x * big)) << "," << fmt(py(l.y * big));
        svg << "\"/>\n";

        auto ray_style = [&](bool closed) {
            return std::string("stroke=\"#1f4e8c\" stroke-width=\"2.5\"") +
                   (closed ? "" : " stroke-dasharray=\"7 5\"");
        };
        line({0, 0}, {r.x * big, r.y * big}, ray_style(nt.right_closed()));
        line({0, 0}, {l.x * big, l.y * big}, ray_style(nt.left_closed()));
    } else if (nt.kind() == NTSet::Kind::Ray) {
        Pt d = unit(nt.dir());
        line({0, 0}, {d.x * big, d.y * big}, "stroke=\"#1f4e8c\" stroke-width=\"3\"");
    }

    // guard lines B_i x = 0 (axes only when NT is empty)
    for (std::size_t row = 0; nt.kind() != NTSet::Kind::Empty && row < spec.guard_rows(); ++row) {
        RatVec b = spec.B.row(row);
        double bx = to_double(b[0]), by = to_double(b[1]);
        double n = std::hypot(bx, by);
        if (n == 0)
            continue;
        Pt dir{-by / n, bx / n};
        line({-dir.x * big, -dir.y * big}, {dir.x * big, dir.y * big},
             "stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"3 3\"");
    }

    // label
    std::string label;
    switch (nt.kind()) {
    case NTSet::Kind::Empty: label = "NT = \xE2\x88\x85"; break;
    case NTSet::Kind::Ray: label = "NT: ray"; break;
    case NTSet::Kind::Sector: label = nt.is_half_plane() ? "NT: half-plane" : "NT: sector"; break;
    }
    svg << "  <text x=\"10\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">" << label
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace loopnt
