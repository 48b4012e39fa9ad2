#include "urllc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urllc/errors.hpp"

namespace urllc {

void Window::validate() const {
    if (!(x1 > x0) || !(y1 > y0) || !std::isfinite(area()))
        throw ParameterError("window must be a non-degenerate finite rectangle");
}

double RoadNetwork::road_length(std::size_t road) const {
    if (road < streets.size()) return window.height();
    if (road < road_count()) return window.width();
    throw DomainError("road id out of range");
}

double RoadNetwork::total_length() const {
    return static_cast<double>(streets.size()) * window.height() +
           static_cast<double>(avenues.size()) * window.width();
}

Point RoadNetwork::point_on_road(std::size_t road, double offset) const {
    if (road < streets.size()) return {streets[road], window.y0 + offset};
    if (road < road_count()) return {window.x0 + offset, avenues[road - streets.size()]};
    throw DomainError("road id out of range");
}

namespace {

std::vector<double> poisson_positions(double intensity, double lo, double hi, Rng& rng) {
    std::poisson_distribution<long> count(intensity * (hi - lo));
    long n = intensity > 0.0 ? count(rng) : 0;
    std::uniform_real_distribution<double> pos(lo, hi);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (double& v : out) v = pos(rng);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RoadNetwork sample_mplp(double density_x, double density_y, const Window& window, std::uint64_t seed) {
    if (!(density_x >= 0.0) || !(density_y >= 0.0)) throw ParameterError("road densities must be >= 0");
    window.validate();
    Rng rng = make_rng(seed);
    RoadNetwork net;
    net.window = window;
    net.streets = poisson_positions(density_x, window.x0, window.x1, rng);
    net.avenues = poisson_positions(density_y, window.y0, window.y1, rng);
    return net;
}

std::vector<RsuSite> place_rsus(const RoadNetwork& roads, double rho_rsu, std::uint64_t seed) {
    if (!(rho_rsu > 0.0)) throw ParameterError("rho_rsu must be > 0");
    Rng rng = make_rng(seed);
    std::vector<RsuSite> out;
    for (std::size_t r = 0; r < roads.road_count(); ++r) {
        double len = roads.road_length(r);
        if (!(len > 0.0)) continue;
        for (double off : poisson_positions(rho_rsu, 0.0, len, rng)) out.push_back({r, off});
    }
    return out;
}

std::vector<Point> sample_ppp(double intensity, const Window& window, std::uint64_t seed) {
    if (!(intensity >= 0.0)) throw ParameterError("intensity must be >= 0");
    window.validate();
    Rng rng = make_rng(seed);
    std::poisson_distribution<long> count(intensity * window.area());
    long n = intensity > 0.0 ? count(rng) : 0;
    std::uniform_real_distribution<double> ux(window.x0, window.x1), uy(window.y0, window.y1);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (Point& p : pts) {
        p.x = ux(rng);
        p.y = uy(rng);
    }
    return pts;
}

NearestSite::NearestSite(std::vector<Point> sites, const Window& window, bool toroidal)
    : sites_(std::move(sites)), w_(window), torus_(toroidal) {
    window.validate();
    if (sites_.empty()) throw ParameterError("nearest-site index needs at least one site");
    const double target = std::sqrt(w_.area() / static_cast<double>(sites_.size()));
    nx_ = std::clamp(static_cast<int>(w_.width() / target), 1, 2048);
    ny_ = std::clamp(static_cast<int>(w_.height() / target), 1, 2048);
    cw_ = w_.width() / nx_;
    ch_ = w_.height() / ny_;
    buckets_.resize(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        int bx = std::clamp(static_cast<int>((sites_[i].x - w_.x0) / cw_), 0, nx_ - 1);
        int by = std::clamp(static_cast<int>((sites_[i].y - w_.y0) / ch_), 0, ny_ - 1);
        buckets_[static_cast<std::size_t>(by) * nx_ + bx].push_back(i);
    }
}

double NearestSite::distance(const Point& a, const Point& b) const {
    double dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
    if (torus_) {
        dx = std::min(dx, w_.width() - dx);
        dy = std::min(dy, w_.height() - dy);
    }
    return std::hypot(dx, dy);
}

std::size_t NearestSite::nearest(const Point& p) const {
    const int px = std::clamp(static_cast<int>((p.x - w_.x0) / cw_), 0, nx_ - 1);
    const int py = std::clamp(static_cast<int>((p.y - w_.y0) / ch_), 0, ny_ - 1);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = sites_.size();
    auto visit = [&](int bx, int by) {
        if (torus_) {
            bx = ((bx % nx_) + nx_) % nx_;
            by = ((by % ny_) + ny_) % ny_;
        } else if (bx < 0 || by < 0 || bx >= nx_ || by >= ny_) {
            return;
        }
        for (std::size_t i : buckets_[static_cast<std::size_t>(by) * nx_ + bx]) {
            double d = distance(p, sites_[i]);
            if (d < best || (d == best && i < best_i)) {
                best = d;
                best_i = i;
            }
        }
    };
    const int max_ring = std::max(nx_, ny_);
    const double cell = std::min(cw_, ch_);
    for (int r = 0; r <= max_ring; ++r) {
        if (r == 0) {
            visit(px, py);
        } else {
            for (int dx = -r; dx <= r; ++dx) {
                visit(px + dx, py - r);
                visit(px + dx, py + r);
            }
            for (int dy = -r + 1; dy <= r - 1; ++dy) {
                visit(px - r, py + dy);
                visit(px + r, py + dy);
            }
        }
        // Anything outside ring r is at least r cell widths away.
        if (best < static_cast<double>(r) * cell) break;
    }
    return best_i;
}

Deployment sample_deployment(const RoadNetwork& roads, double rho_rsu, double lambda_inp,
                             std::uint64_t seed) {
    if (!(lambda_inp > 0.0)) throw ParameterError("lambda_inp must be > 0");
    Deployment dep;
    dep.inp_positions = sample_ppp(lambda_inp, roads.window, mix64(seed ^ 0x1));
    dep.rsus = place_rsus(roads, rho_rsu, mix64(seed ^ 0x2));
    if (dep.inp_positions.empty()) {
        if (!dep.rsus.empty()) throw ModelError("RSUs present but no InP was sampled");
        return dep;
    }
    NearestSite index(dep.inp_positions, roads.window, true);
    dep.cell_assignment.reserve(dep.rsus.size());
    for (const RsuSite& s : dep.rsus)
        dep.cell_assignment.push_back(index.nearest(roads.point_on_road(s.road, s.offset)));
    return dep;
}

void CellAreaModel::validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !(lambda_inp > 0.0))
        throw ParameterError("cell-area model needs a, b, lambda_inp > 0");
    if (!(rho_road >= 0.0)) throw ParameterError("rho_road must be >= 0");
}

double pvt_cell_area_pdf(double x, const CellAreaModel& model) {
    model.validate();
    if (!(x > 0.0)) throw DomainError("cell area must be > 0");
    const double rate = model.b * model.lambda_inp;
    return std::exp(model.a * std::log(rate) - std::lgamma(model.a) + (model.a - 1.0) * std::log(x) -
                    rate * x);
}

double sample_cell_area(const CellAreaModel& model, Rng& rng) {
    model.validate();
    std::gamma_distribution<double> g(model.a, 1.0 / (model.b * model.lambda_inp));
    return g(rng);
}

double expected_nrsu(const CellAreaModel& model, double rho_rsu, NrsuReading reading) {
    model.validate();
    if (!(rho_rsu > 0.0)) throw ParameterError("rho_rsu must be > 0");
    if (reading == NrsuReading::AsPrinted) return model.rho_road / rho_rsu;
    return model.rho_road * model.mean_area() / rho_rsu;
}

}  // namespace urllc
