#pragma once

#include <array>
#include <string>
#include <vector>

#include "lemni/polynomial.hpp"

namespace lemni {

/// Polyline rendering of the lemniscate {|P(z)| = 1} inside a bounding box.
struct CurveSet {
    std::array<double, 4> box{}; // xmin, xmax, ymin, ymax
    int resolution = 0;          // grid cells per axis
    std::vector<std::vector<std::array<double, 2>>> polylines;
    std::vector<bool> closed; // closed polylines repeat their first vertex at the end

    std::size_t vertex_count() const {
        std::size_t n = 0;
        for (const auto& poly : polylines) n += poly.size();
        return n;
    }
};

/// Origin-centered square box guaranteed to contain {|P| <= 1}: half-width
/// 2 * (1 + max(Cauchy root bound, |lc|^{-1/deg})). The second term covers
/// small leading coefficients, where the root bound alone says nothing about
/// the sublevel set.
std::array<double, 4> bounding_box(const ExactPoly& p);

/// Marching squares on g(x, y) = |P(x+iy)|^2 - 1 with linear interpolation;
/// saddle cells are disambiguated by sampling the cell center.
CurveSet trace_lemniscate(const ExactPoly& p, int resolution);

/// Connected polyline groups after endpoint-stitching within one cell diagonal.
int component_count_numeric(const CurveSet& c);

void emit_svg(const CurveSet& c, const std::string& path);
void emit_csv(const CurveSet& c, const std::string& path);

} // namespace lemni
