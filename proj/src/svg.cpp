#include "rootcite/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "rootcite/errors.hpp"

namespace rootcite {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 28.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 64.0;
constexpr const char* kCountColor = "#c62828";
constexpr const char* kDevColor = "#1565c0";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// First multiple of step (> 0) at or above v; correct for negative v too.
std::int64_t first_tick_at_or_above(std::int64_t v, std::int64_t step) {
    std::int64_t q = v / step;
    if (v % step > 0) ++q;
    return q * step;
}

// Smallest step from {1, 2, 5} x 10^k giving at most `target` intervals.
std::int64_t nice_step(std::int64_t span, std::int64_t target) {
    if (span <= 0) return 1;
    std::int64_t step = 1;
    while (true) {
        for (std::int64_t mult : {1, 2, 5}) {
            std::int64_t candidate = step * mult;
            if (span / candidate <= target) return candidate;
        }
        step *= 10;
    }
}

}  // namespace

void write_spectrum_svg(std::ostream& out, const std::vector<SpectroscopyRow>& rows,
                        std::string_view source_label) {
    if (rows.empty()) throw EmptyInputError("write_spectrum_svg: no rows");

    std::int64_t x_min = rows.front().rpy;
    std::int64_t x_max = rows.back().rpy;
    if (x_min == x_max) {
        --x_min;
        ++x_max;
    }

    std::int64_t y_min = 0;
    std::int64_t y_max = 1;
    for (const SpectroscopyRow& row : rows) {
        y_min = std::min({y_min, row.count, row.median_dev});
        y_max = std::max({y_max, row.count, row.median_dev});
    }

    double plot_w = kWidth - kMarginLeft - kMarginRight;
    double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double year) {
        return kMarginLeft + (year - static_cast<double>(x_min)) /
                                 static_cast<double>(x_max - x_min) * plot_w;
    };
    auto sy = [&](double value) {
        return kMarginTop + plot_h - (value - static_cast<double>(y_min)) /
                                         static_cast<double>(y_max - y_min) * plot_h;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" "
           "viewBox=\"0 0 960 540\">\n";
    out << "<rect width=\"960\" height=\"540\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"26\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">citation spectrum ("
        << source_label << ")</text>\n";

    // axes
    double x0 = kMarginLeft;
    double x1 = kWidth - kMarginRight;
    double y0 = kMarginTop + plot_h;
    double y1 = kMarginTop;
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
        << "\" y2=\"" << fmt(y0) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0)
        << "\" y2=\"" << fmt(y1) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // zero line when the deviation dips below the axis floor
    if (y_min < 0) {
        double zy = sy(0.0);
        out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(zy) << "\" x2=\"" << fmt(x1)
            << "\" y2=\"" << fmt(zy)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    std::int64_t x_step = nice_step(x_max - x_min, 12);
    for (std::int64_t tick = first_tick_at_or_above(x_min, x_step); tick <= x_max;
         tick += x_step) {
        double tx = sx(static_cast<double>(tick));
        out << "<line x1=\"" << fmt(tx) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(tx)
            << "\" y2=\"" << fmt(y0 + 5) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(y0 + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << tick << "</text>\n";
    }

    std::int64_t y_step = nice_step(y_max - y_min, 8);
    for (std::int64_t tick = first_tick_at_or_above(y_min, y_step); tick <= y_max;
         tick += y_step) {
        double ty = sy(static_cast<double>(tick));
        out << "<line x1=\"" << fmt(x0 - 5) << "\" y1=\"" << fmt(ty) << "\" x2=\"" << fmt(x0)
            << "\" y2=\"" << fmt(ty) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(x0 - 9) << "\" y=\"" << fmt(ty + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << tick
            << "</text>\n";
    }

    out << "<text x=\"" << fmt(kMarginLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
           "reference publication year</text>\n";
    out << "<text x=\"18\" y=\"" << fmt(kMarginTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << fmt(kMarginTop + plot_h / 2) << ")\">citations / median deviation</text>\n";

    auto polyline = [&](const char* color, auto value_of) {
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != 0) out << ' ';
            out << fmt(sx(static_cast<double>(rows[i].rpy))) << ','
                << fmt(sy(static_cast<double>(value_of(rows[i]))));
        }
        out << "\"/>\n";
    };
    polyline(kCountColor, [](const SpectroscopyRow& r) { return r.count; });
    polyline(kDevColor, [](const SpectroscopyRow& r) { return r.median_dev; });

    // legend
    double lx = x1 - 190;
    out << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(y1 + 6)
        << "\" width=\"182\" height=\"40\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
    out << "<line x1=\"" << fmt(lx + 10) << "\" y1=\"" << fmt(y1 + 19) << "\" x2=\""
        << fmt(lx + 34) << "\" y2=\"" << fmt(y1 + 19) << "\" stroke=\"" << kCountColor
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fmt(lx + 40) << "\" y=\"" << fmt(y1 + 23)
        << "\" font-family=\"sans-serif\" font-size=\"12\">citations</text>\n";
    out << "<line x1=\"" << fmt(lx + 10) << "\" y1=\"" << fmt(y1 + 35) << "\" x2=\""
        << fmt(lx + 34) << "\" y2=\"" << fmt(y1 + 35) << "\" stroke=\"" << kDevColor
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fmt(lx + 40) << "\" y=\"" << fmt(y1 + 39)
        << "\" font-family=\"sans-serif\" font-size=\"12\">median deviation</text>\n";

    out << "</svg>\n";
}

}  // namespace rootcite
