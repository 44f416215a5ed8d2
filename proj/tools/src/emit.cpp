#include "qgauge_cli/emit.hpp"

#include <ostream>

#include <fmt/core.h>

namespace qgauge::cli {

std::string format_number(double value) { return fmt::format("{:.17g}", value + 0.0); }

void write_trace_csv(std::ostream& out, const ObservableTrace& trace) {
    out << "t,norm,mean_x,canonical_p,kinetic_p,var_x\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out << format_number(trace.times[i]) << ',' << format_number(trace.norm[i]) << ','
            << format_number(trace.mean_x[i]) << ',' << format_number(trace.canonical_p[i]) << ','
            << format_number(trace.kinetic_p[i]) << ',' << format_number(trace.var_x[i]) << '\n';
    }
}

void write_snapshots_csv(std::ostream& out, const std::vector<WaveField>& snapshots) {
    out << "t,x,re,im,abs2\n";
    for (const auto& wf : snapshots) {
        const std::string t = format_number(wf.time());
        for (std::size_t i = 0; i < wf.size(); ++i) {
            out << t << ',' << format_number(wf.grid().point(i)) << ',' << format_number(wf[i].real()) << ','
                << format_number(wf[i].imag()) << ',' << format_number(std::norm(wf[i])) << '\n';
        }
    }
}

nlohmann::json trace_json(const ObservableTrace& trace) {
    return {{"t", trace.times},           {"norm", trace.norm},           {"mean_x", trace.mean_x},
            {"canonical_p", trace.canonical_p}, {"kinetic_p", trace.kinetic_p}, {"var_x", trace.var_x}};
}

nlohmann::json snapshots_json(const std::vector<WaveField>& snapshots) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& wf : snapshots) {
        std::vector<double> re(wf.size()), im(wf.size());
        for (std::size_t i = 0; i < wf.size(); ++i) {
            re[i] = wf[i].real();
            im[i] = wf[i].imag();
        }
        out.push_back({{"t", wf.time()}, {"x", wf.grid().points()}, {"re", re}, {"im", im}});
    }
    return out;
}

}  // namespace qgauge::cli
