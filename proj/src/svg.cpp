#include "chebseq/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace chebseq {

std::string scatter_svg(const std::vector<LogLogPoint>& points, const FitReport& fit,
                        const std::string& title) {
    const double width = 640, height = 480;
    const double ml = 60, mr = 20, mt = 40, mb = 45;

    double xmin = 1, xmax = 1, ymin = 0, ymax = 1;
    if (!points.empty()) {
        xmin = points.front().N;
        xmax = points.back().N;
        auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const auto& a, const auto& b) { return a.loglog < b.loglog; });
        ymin = lo->loglog;
        ymax = hi->loglog;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << title << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"12\">N</text>\n";
    out << "<text x=\"14\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 "
        << (mt + height - mb) / 2 << ")\">log log term</text>\n";
    // axis extents
    out << "<text x=\"" << ml << "\" y=\"" << height - mb + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << std::setprecision(0) << xmin
        << "</text>\n";
    out << "<text x=\"" << sx(xmax) << "\" y=\"" << height - mb + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << xmax << "</text>\n";
    out << std::setprecision(2);
    out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(ymin) << "\" text-anchor=\"end\" font-size=\"10\">"
        << ymin << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(ymax) << "\" text-anchor=\"end\" font-size=\"10\">"
        << ymax << "</text>\n";
    // fitted line over the N range
    const double y1 = fit.C * xmin + fit.intercept;
    const double y2 = fit.C * xmax + fit.intercept;
    out << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(xmax)
        << "\" y2=\"" << sy(y2) << "\" stroke=\"#c03030\" stroke-width=\"1.5\"/>\n";
    for (const auto& p : points) {
        out << "<circle cx=\"" << sx(static_cast<double>(p.N)) << "\" cy=\"" << sy(p.loglog)
            << "\" r=\"3\" fill=\"#204080\"/>\n";
    }
    out << std::setprecision(6) << "<text x=\"" << width - mr << "\" y=\"" << mt - 6
        << "\" text-anchor=\"end\" font-size=\"12\">C = " << fit.C << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace chebseq
