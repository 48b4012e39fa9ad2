#pragma once

#include <string>
#include <vector>

namespace urllc {

// Rows of already-formatted cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
void write_text_file(const std::string& path, const std::string& text);

struct ChartSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;  // non-finite values break the line
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
};

// Self-contained SVG line chart with axes, ticks and a legend.
std::string render_svg(const Chart& chart);

}  // namespace urllc
