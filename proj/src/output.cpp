#include "urllc/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "urllc/errors.hpp"

namespace urllc {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Roughly five "nice" ticks covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= 6.0) break;
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
        out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size()) throw ParameterError("CSV row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

std::string render_svg(const Chart& chart) {
    constexpr double W = 720, H = 460, left = 80, right = 200, top = 40, bottom = 60;
    const double pw = W - left - right, ph = H - top - bottom;

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : chart.series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 - x0 <= 0) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 <= 0) {
        const double pad = std::max(std::abs(y0) * 0.05, 1e-12);
        y0 -= pad;
        y1 += pad;
    }
    const double ypad = 0.05 * (y1 - y0);
    y0 -= ypad;
    y1 += ypad;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"460\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt("%.1f", left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(chart.title) + "</text>\n";
    s += "<rect x=\"" + fmt("%.1f", left) + "\" y=\"" + fmt("%.1f", top) + "\" width=\"" + fmt("%.1f", pw) +
         "\" height=\"" + fmt("%.1f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : ticks(x0, x1)) {
        const double x = px(t);
        s += "<line x1=\"" + fmt("%.1f", x) + "\" y1=\"" + fmt("%.1f", top + ph) + "\" x2=\"" + fmt("%.1f", x) +
             "\" y2=\"" + fmt("%.1f", top + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt("%.1f", x) + "\" y=\"" + fmt("%.1f", top + ph + 18) +
             "\" text-anchor=\"middle\">" + fmt("%g", t) + "</text>\n";
    }
    for (double t : ticks(y0, y1)) {
        const double y = py(t);
        s += "<line x1=\"" + fmt("%.1f", left - 5) + "\" y1=\"" + fmt("%.1f", y) + "\" x2=\"" +
             fmt("%.1f", left + pw) + "\" y2=\"" + fmt("%.1f", y) + "\" stroke=\"#ddd\"/>\n";
        s += "<text x=\"" + fmt("%.1f", left - 8) + "\" y=\"" + fmt("%.1f", y + 4) +
             "\" text-anchor=\"end\">" + fmt("%.4g", t) + "</text>\n";
    }
    s += "<text x=\"" + fmt("%.1f", left + pw / 2) + "\" y=\"" + fmt("%.1f", H - 15) +
         "\" text-anchor=\"middle\">" + xml_escape(chart.x_label) + "</text>\n";
    s += "<text transform=\"translate(18," + fmt("%.1f", top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + xml_escape(chart.y_label) + "</text>\n";

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const ChartSeries& ser = chart.series[k];
        const std::string color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
        std::string path;
        bool pen = false;
        for (std::size_t i = 0; i < ser.x.size() && i < ser.y.size(); ++i) {
            if (!std::isfinite(ser.y[i])) {
                pen = false;
                continue;
            }
            path += (pen ? " L" : " M") + fmt("%.2f", px(ser.x[i])) + "," + fmt("%.2f", py(ser.y[i]));
            pen = true;
            s += "<circle cx=\"" + fmt("%.2f", px(ser.x[i])) + "\" cy=\"" + fmt("%.2f", py(ser.y[i])) +
                 "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        if (!path.empty())
            s += "<path d=\"" + path.substr(1) + "\" fill=\"none\" stroke=\"" + color +
                 "\" stroke-width=\"1.5\"/>\n";
        const double ly = top + 10 + 18.0 * static_cast<double>(k);
        s += "<line x1=\"" + fmt("%.1f", left + pw + 12) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" +
             fmt("%.1f", left + pw + 36) + "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + fmt("%.1f", left + pw + 42) + "\" y=\"" + fmt("%.1f", ly + 4) + "\">" +
             xml_escape(ser.name) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace urllc
