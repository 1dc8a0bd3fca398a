#pragma once

#include <string>

#include "liqshock/grid.hpp"
#include "liqshock/params.hpp"
#include "liqshock/prices.hpp"
#include "liqshock/solver.hpp"

namespace liqshock {

// Shortest decimal representation that round-trips to the same double;
// locale-independent. NaN/Inf are spelled nan/inf/-inf.
std::string fmt_double(double v);

// Header "x,S,tau,u,I", one record per (time level, node), time-major.
void write_surface_csv(const std::string& path, const Surface& surface);

// Header "x,S,t,p,q,r0,r1", same ordering contract as the surface export
// (level-major, so t = T - tau runs from T down to 0).
void write_prices_csv(const std::string& path, const Surface& surface,
                      const PriceSurfaces& prices);

void write_text_file(const std::string& path, const std::string& content);

std::string report_to_json(const SolveReport& report);
std::string ladder_to_json(const LadderReport& report);

}  // namespace liqshock
