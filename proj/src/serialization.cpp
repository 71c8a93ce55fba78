#include "twophase/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twophase {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string format_double_svg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Minimal ordered writer; nlohmann would reformat the doubles.
class JsonWriter {
public:
    JsonWriter& field(const char* name, double v) { return raw(name, format_double(v)); }
    JsonWriter& field(const char* name, int v) { return raw(name, std::to_string(v)); }
    JsonWriter& field(const char* name, bool v) { return raw(name, v ? "true" : "false"); }
    JsonWriter& field(const char* name, const char* v) {
        return raw(name, std::string("\"") + v + "\"");
    }
    JsonWriter& field(const char* name, const std::string& v) {
        return raw(name, "\"" + v + "\"");
    }

    std::string str() const { return "{" + body_ + "}"; }

private:
    JsonWriter& raw(const char* name, const std::string& v) {
        if (!body_.empty()) body_ += ",";
        body_ += std::string("\"") + name + "\":" + v;
        return *this;
    }
    std::string body_;
};

}  // namespace

std::string to_json(const ProblemParams& p) {
    return JsonWriter()
        .field("N", p.dim)
        .field("rho_minus", p.rho_minus)
        .field("rho_plus", p.rho_plus)
        .field("V_minus", p.V_minus)
        .field("V_plus", p.V_plus)
        .field("gamma", p.gamma)
        .str();
}

std::string to_json(const ThresholdResult& t) {
    return JsonWriter()
        .field("gamma_star", t.gamma_star)
        .field("alpha_star", t.alpha_star)
        .field("beta_star", t.beta_star)
        .field("iterations", t.iterations)
        .field("residual", t.residual)
        .str();
}

std::string to_json(const ClassificationResult& r) {
    const std::string cost = JsonWriter()
                                 .field("perim_minus", r.cost.perim_minus)
                                 .field("perim_plus", r.cost.perim_plus)
                                 .field("interface", r.cost.interface)
                                 .field("total", r.cost.total)
                                 .str();
    std::string body = "{";
    body += "\"params\":" + to_json(r.params);
    body += ",\"gamma_star\":" + format_double(r.threshold.gamma_star);
    body += std::string(",\"regime\":\"") + regime_name(r.regime) + "\"";
    body += ",\"alpha\":" + format_double(r.minimizer.alpha);
    body += ",\"beta\":" + format_double(r.minimizer.beta);
    body += ",\"R_minus\":" + format_double(r.minimizer.R_minus);
    body += ",\"R_plus\":" + format_double(r.minimizer.R_plus);
    body += ",\"cost\":" + cost;
    body += std::string(",\"orientation_swapped\":") + (r.orientation_swapped ? "true" : "false");
    body += "}";
    return body;
}

std::string to_json(const oracle::OracleReport& r) {
    std::string body = "{";
    body += "\"params\":" + to_json(r.params);
    body += ",\"analytic_cost\":" + format_double(r.analytic_cost);
    body += ",\"brute_cost\":" + format_double(r.brute_cost);
    body += ",\"arg_gap\":" + format_double(r.arg_gap);
    body += ",\"cost_gap\":" + format_double(r.cost_gap);
    body += std::string(",\"passed\":") + (r.passed ? "true" : "false");
    body += "}";
    return body;
}

ProblemParams params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("params_from_json: parse error: ") + e.what());
    }
    if (j.contains("params")) j = j["params"];
    ProblemParams p;
    try {
        p.dim = j.at("N").get<int>();
        p.rho_minus = j.at("rho_minus").get<double>();
        p.rho_plus = j.at("rho_plus").get<double>();
        p.V_minus = j.at("V_minus").get<double>();
        p.V_plus = j.at("V_plus").get<double>();
        p.gamma = j.at("gamma").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("params_from_json: missing or bad field: ") +
                                 e.what());
    }
    return p;
}

std::string cross_section_csv(const CrossSection& cs) {
    std::string out = "side,theta,x1,x2\n";
    const auto rows = [&out](const char* side, const std::vector<CrossSection::Point>& pts) {
        for (const auto& pt : pts)
            out += std::string(side) + "," + format_double(pt.theta) + "," +
                   format_double(pt.x1) + "," + format_double(pt.x2) + "\n";
    };
    rows("left", cs.left);
    rows("right", cs.right);
    if (!cs.interface_empty) {
        out += "interface,0,0," + format_double(cs.interface_inner) + "\n";
        out += "interface,1,0," + format_double(cs.interface_outer) + "\n";
    }
    return out;
}

std::string cross_section_svg(const CrossSection& cs) {
    double x_min = 0.0, x_max = 0.0, y_max = 0.0;
    const auto grow = [&](const std::vector<CrossSection::Point>& pts) {
        for (const auto& pt : pts) {
            x_min = std::min(x_min, pt.x1);
            x_max = std::max(x_max, pt.x1);
            y_max = std::max(y_max, std::abs(pt.x2));
        }
    };
    grow(cs.left);
    grow(cs.right);
    const double span = std::max(x_max - x_min, 2.0 * y_max);
    const double pad = 0.06 * span;
    const double w = (x_max - x_min) + 2.0 * pad;
    const double h = 2.0 * y_max + 2.0 * pad;
    const double scale = 560.0 / std::max(w, h);

    const auto X = [&](double x) { return format_double_svg((x - x_min + pad) * scale); };
    const auto Y = [&](double y) { return format_double_svg((y_max + pad - y) * scale); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double_svg(w * scale)
        << "\" height=\"" << format_double_svg(h * scale) << "\">\n";
    svg << "  <line x1=\"" << X(0.0) << "\" y1=\"" << Y(-y_max - 0.5 * pad) << "\" x2=\"" << X(0.0)
        << "\" y2=\"" << Y(y_max + 0.5 * pad)
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    const auto polyline = [&](const std::vector<CrossSection::Point>& pts, const char* color) {
        svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg << ' ';
            svg << X(pts[i].x1) << ',' << Y(pts[i].x2);
        }
        svg << "\"/>\n";
    };
    polyline(cs.left, "#1f6fb2");
    polyline(cs.right, "#b2501f");
    if (!cs.interface_empty) {
        for (const double s : {1.0, -1.0}) {
            svg << "  <line x1=\"" << X(0.0) << "\" y1=\"" << Y(s * cs.interface_inner)
                << "\" x2=\"" << X(0.0) << "\" y2=\"" << Y(s * cs.interface_outer)
                << "\" stroke=\"#333333\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace twophase
