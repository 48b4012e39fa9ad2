#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "urllc/rng.hpp"

namespace urllc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Window {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    void validate() const;
};

// Manhattan road grid: streets run north-south at the given x coordinates,
// avenues run west-east at the given y coordinates. Road ids number the
// streets first, then the avenues.
struct RoadNetwork {
    std::vector<double> avenues;
    std::vector<double> streets;
    Window window;

    std::size_t road_count() const { return streets.size() + avenues.size(); }
    double road_length(std::size_t road) const;
    double total_length() const;
    // Point at `offset` metres along the road from its window entry.
    Point point_on_road(std::size_t road, double offset) const;
};

struct RsuSite {
    std::size_t road = 0;
    double offset = 0.0;
};

struct Deployment {
    std::vector<Point> inp_positions;
    std::vector<RsuSite> rsus;
    std::vector<std::size_t> cell_assignment;  // RSU index -> InP index
};

RoadNetwork sample_mplp(double density_x, double density_y, const Window& window, std::uint64_t seed);

// Poisson(rho_rsu * length) RSUs per road at uniform offsets, sorted by road
// then offset.
std::vector<RsuSite> place_rsus(const RoadNetwork& roads, double rho_rsu, std::uint64_t seed);

std::vector<Point> sample_ppp(double intensity, const Window& window, std::uint64_t seed);

// Nearest-site lookup on a bucket grid. Ties go to the lowest site index.
class NearestSite {
public:
    NearestSite(std::vector<Point> sites, const Window& window, bool toroidal);
    std::size_t nearest(const Point& p) const;
    double distance(const Point& a, const Point& b) const;
    std::size_t size() const { return sites_.size(); }

private:
    std::vector<Point> sites_;
    Window w_;
    bool torus_;
    int nx_ = 1, ny_ = 1;
    double cw_ = 1.0, ch_ = 1.0;
    std::vector<std::vector<std::size_t>> buckets_;
};

// InPs from a PPP of intensity lambda_inp, RSUs on the roads, each RSU
// assigned to its nearest InP (toroidal metric).
Deployment sample_deployment(const RoadNetwork& roads, double rho_rsu, double lambda_inp,
                             std::uint64_t seed);

struct CellAreaModel {
    double a = 3.61;
    double b = 3.57;
    double lambda_inp = 2.5e-2;  // InPs per m^2
    double rho_road = 0.002;     // m of road per m^2

    void validate() const;
    double mean_area() const { return a / (b * lambda_inp); }
};

// Gamma(a, rate b lambda) density of a typical cell area.
double pvt_cell_area_pdf(double x, const CellAreaModel& model);
double sample_cell_area(const CellAreaModel& model, Rng& rng);

enum class NrsuReading {
    RoadLengthTimesArea,  // rho_road * E[area] / rho_rsu
    AsPrinted             // rho_road * (integral of the pdf) / rho_rsu
};

double expected_nrsu(const CellAreaModel& model, double rho_rsu,
                     NrsuReading reading = NrsuReading::RoadLengthTimesArea);

}  // namespace urllc
