#include "liqshock/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "liqshock/errors.hpp"

namespace liqshock {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << content;
    if (!out) throw ValidationError("failed writing output file: " + path);
}

void write_surface_csv(const std::string& path, const Surface& surface) {
    const Grid& g = surface.grid;
    std::string body = "x,S,tau,u,I\n";
    for (std::size_t lvl = 0; lvl < surface.levels(); ++lvl) {
        const double tau = static_cast<double>(lvl) * g.dtau;
        for (std::size_t i = 0; i < g.nSpace; ++i) {
            body += fmt_double(g.xNodes[i]);
            body += ',';
            body += fmt_double(g.sNodes[i]);
            body += ',';
            body += fmt_double(tau);
            body += ',';
            body += fmt_double(surface.at(lvl, i));
            body += ',';
            body += fmt_double(surface.memory_at(lvl, i));
            body += '\n';
        }
    }
    write_text_file(path, body);
}

void write_prices_csv(const std::string& path, const Surface& surface,
                      const PriceSurfaces& prices) {
    const Grid& g = surface.grid;
    std::string body = "x,S,t,p,q,r0,r1\n";
    for (std::size_t lvl = 0; lvl < prices.levels; ++lvl) {
        const double t = g.horizon - static_cast<double>(lvl) * g.dtau;
        for (std::size_t i = 0; i < g.nSpace; ++i) {
            const std::size_t k = lvl * g.nSpace + i;
            body += fmt_double(g.xNodes[i]);
            body += ',';
            body += fmt_double(g.sNodes[i]);
            body += ',';
            body += fmt_double(t);
            body += ',';
            body += fmt_double(prices.p[k]);
            body += ',';
            body += fmt_double(prices.q[k]);
            body += ',';
            body += fmt_double(prices.r0[k]);
            body += ',';
            body += fmt_double(prices.r1[k]);
            body += '\n';
        }
    }
    write_text_file(path, body);
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::ordered_json j;
    j["scheme"] = report.scheme;
    j["iterations"] = report.iterations;
    j["finalIncrement"] = report.finalIncrement;
    j["maxAbsU"] = report.maxAbsU;
    j["estimateRatio"] = report.estimateRatio;
    j["wallTimeMs"] = report.wallTimeMs;
    return j.dump(2) + "\n";
}

std::string ladder_to_json(const LadderReport& report) {
    nlohmann::ordered_json j;
    j["levels"] = report.levels;
    j["supDiffs"] = report.supDiffs;
    j["worstIncrease"] = report.worstIncrease;
    return j.dump(2) + "\n";
}

}  // namespace liqshock
