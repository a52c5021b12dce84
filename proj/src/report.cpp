#include "fremder/report.hpp"

#include <cstdio>
#include <sstream>

namespace fremder {
namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

std::string complex_text(Complex z) { return format_real(z.real()) + " " + format_real(z.imag()); }

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const Report& r) {
    json j;
    j["schema"] = std::string(kReportSchema);
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["status"] = r.status;

    j["solution"] = nullptr;
    if (r.solution) {
        json s;
        s["vector"] = vector_json(r.solution->vector);
        s["residual"] = complex_json(r.solution->residual);
        s["kind"] = std::string(to_string(r.solution->kind));
        s["coefficients"] = r.solution->coefficients ? json(*r.solution->coefficients) : json(nullptr);
        j["solution"] = std::move(s);
    }

    j["region"] = nullptr;
    if (r.region) {
        j["region"] = {{"re_min", r.region->re_min}, {"re_max", r.region->re_max},
                       {"im_min", r.region->im_min}, {"im_max", r.region->im_max},
                       {"corner_rule", r.region->corner_rule}, {"exact", r.region->exact}};
    }

    j["pairs"] = nullptr;
    if (r.pairs) {
        json pairs = json::array();
        for (const GeneigPair& p : *r.pairs) {
            pairs.push_back({{"z", complex_json(p.z)},
                             {"vector", vector_json(p.x)},
                             {"residual", complex_json(p.residual)},
                             {"kind", std::string(to_string(p.kind))}});
        }
        j["pairs"] = std::move(pairs);
    }

    j["diagnostics"] = json::object();
    for (const auto& [k, v] : r.diagnostics) j["diagnostics"][k] = v;
    return j;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "schema: " << kReportSchema << '\n';
    out << "command: " << r.command << '\n';
    out << "input_digest: " << r.input_digest << '\n';
    out << "status: " << r.status << '\n';
    if (r.solution) {
        out << "solution.kind: " << to_string(r.solution->kind) << '\n';
        out << "solution.residual: " << complex_text(r.solution->residual) << '\n';
        for (Index i = 0; i < r.solution->vector.size(); ++i) {
            out << "solution.vector[" << i << "]: " << complex_text(r.solution->vector(i)) << '\n';
        }
        if (r.solution->coefficients) {
            const auto& d = *r.solution->coefficients;
            for (std::size_t i = 0; i < d.size(); ++i) {
                out << "solution.coefficients[" << i << "]: " << format_real(d[i]) << '\n';
            }
        }
    }
    if (r.region) {
        out << "region.re_min: " << format_real(r.region->re_min) << '\n';
        out << "region.re_max: " << format_real(r.region->re_max) << '\n';
        out << "region.im_min: " << format_real(r.region->im_min) << '\n';
        out << "region.im_max: " << format_real(r.region->im_max) << '\n';
        out << "region.corner_rule: " << (r.region->corner_rule ? "true" : "false") << '\n';
        out << "region.exact: " << (r.region->exact ? "true" : "false") << '\n';
    }
    if (r.pairs) {
        for (std::size_t k = 0; k < r.pairs->size(); ++k) {
            const GeneigPair& p = (*r.pairs)[k];
            out << "pairs[" << k << "].z: " << complex_text(p.z) << '\n';
            out << "pairs[" << k << "].kind: " << to_string(p.kind) << '\n';
            out << "pairs[" << k << "].residual: " << complex_text(p.residual) << '\n';
            for (Index i = 0; i < p.x.size(); ++i) {
                out << "pairs[" << k << "].vector[" << i << "]: " << complex_text(p.x(i)) << '\n';
            }
        }
    }
    for (const auto& [k, v] : r.diagnostics) out << "diagnostics." << k << ": " << v << '\n';
    return out.str();
}

}  // namespace fremder
