#include "fracdimer/svg.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fracdimer/errors.hpp"

namespace fracdimer {
namespace {

// Plot geometry (800x500 canvas).
constexpr double kLeft = 70.0, kRight = 160.0, kTop = 20.0, kBottom = 50.0;
constexpr double kPlotW = 800.0 - kLeft - kRight;   // 570
constexpr double kPlotH = 500.0 - kTop - kBottom;   // 430

const char* const kPalette[8] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const std::set<std::string> kMeasureFields = {
    "norm_sq", "coherence", "negativity", "log_negativity", "concurrence",
    "chsh"};
const std::set<std::string> kParamFields = {"tau", "nu1", "nu2", "v12", "p"};

#if defined(__GNUC__)
__attribute__((format(printf, 2, 3)))
#endif
void appendf(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    out += buf;
}

}  // namespace

double record_field(const ResourceRecord& r, const std::string& name) {
    if (name == "t") return r.t;
    if (name == "tau") return r.tau;
    if (name == "nu1") return r.nu1;
    if (name == "nu2") return r.nu2;
    if (name == "v12") return r.v12;
    if (name == "p") return r.p;
    if (name == "norm_sq") return r.norm_sq;
    if (name == "coherence") return r.coherence;
    if (name == "negativity") return r.negativity;
    if (name == "log_negativity") return r.log_negativity;
    if (name == "concurrence") return r.concurrence;
    if (name == "chsh") return r.chsh;
    throw unknown_field_error("unknown field '" + name + "'");
}

std::string render_svg(const std::vector<ResourceRecord>& records,
                       const std::string& y_field,
                       const std::optional<std::string>& group_by) {
    if (records.empty())
        throw invalid_argument_error("cannot render an empty record list");
    if (!kMeasureFields.count(y_field)) {
        record_field(records[0], y_field);  // unknown names fail here
        throw unknown_field_error("field '" + y_field +
                                  "' is not a plottable measure");
    }
    if (group_by && !kParamFields.count(*group_by)) {
        record_field(records[0], *group_by);
        throw unknown_field_error("field '" + *group_by +
                                  "' cannot group a plot");
    }

    // Groups keyed by parameter value, ascending; record order kept within.
    std::map<double, std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i) {
        const double key = group_by ? record_field(records[i], *group_by) : 0.0;
        groups[key].push_back(i);
    }

    double xmin = records[0].t, xmax = records[0].t;
    double ymin = record_field(records[0], y_field), ymax = ymin;
    for (const ResourceRecord& r : records) {
        xmin = std::min(xmin, r.t);
        xmax = std::max(xmax, r.t);
        const double v = record_field(r, y_field);
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    auto pad = [](double& lo, double& hi) {
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            lo -= 0.5;
            hi += 0.5;
        }
    };
    pad(xmin, xmax);
    pad(ymin, ymax);

    auto px = [&](double t) {
        return kLeft + (t - xmin) / (xmax - xmin) * kPlotW;
    };
    auto py = [&](double v) {
        return kTop + (1.0 - (v - ymin) / (ymax - ymin)) * kPlotH;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
    out += "<rect width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";
    appendf(out,
            "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
            "fill=\"none\" stroke=\"#888888\"/>\n",
            kLeft, kTop, kPlotW, kPlotH);

    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (int i = 0; i < 5; ++i) {
        const double xv = xmin + i * (xmax - xmin) / 4.0;
        const double x = px(xv);
        appendf(out,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#888888\"/>\n",
                x, kTop + kPlotH, x, kTop + kPlotH + 5.0);
        appendf(out,
                "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.4g"
                "</text>\n",
                x, kTop + kPlotH + 18.0, xv);
    }
    for (int i = 0; i < 5; ++i) {
        const double yv = ymin + i * (ymax - ymin) / 4.0;
        const double y = py(yv);
        appendf(out,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#888888\"/>\n",
                kLeft - 5.0, y, kLeft, y);
        appendf(out,
                "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.4g</text>\n",
                kLeft - 8.0, y + 4.0, yv);
    }
    appendf(out,
            "<text x=\"%.2f\" y=\"488.00\" text-anchor=\"middle\">t</text>\n",
            kLeft + kPlotW / 2.0);
    appendf(out,
            "<text x=\"16.00\" y=\"%.2f\" text-anchor=\"middle\" "
            "transform=\"rotate(-90 16 %.0f)\">%s</text>\n",
            kTop + kPlotH / 2.0, kTop + kPlotH / 2.0, y_field.c_str());

    int gi = 0;
    for (const auto& [value, idxs] : groups) {
        const char* color = kPalette[gi % 8];
        if (idxs.size() == 1) {
            appendf(out,
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n",
                    px(records[idxs[0]].t),
                    py(record_field(records[idxs[0]], y_field)), color);
        } else {
            appendf(out,
                    "<polyline fill=\"none\" stroke=\"%s\" "
                    "stroke-width=\"1.5\" points=\"",
                    color);
            bool first = true;
            for (size_t idx : idxs) {
                appendf(out, "%s%.2f,%.2f", first ? "" : " ",
                        px(records[idx].t),
                        py(record_field(records[idx], y_field)));
                first = false;
            }
            out += "\"/>\n";
        }
        if (group_by) {
            const double ly = 40.0 + gi * 18.0;
            appendf(out,
                    "<line x1=\"652.00\" y1=\"%.2f\" x2=\"672.00\" "
                    "y2=\"%.2f\" stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                    ly, ly, color);
            appendf(out, "<text x=\"678.00\" y=\"%.2f\">%s = %.6g</text>\n",
                    ly + 4.0, group_by->c_str(), value);
        }
        ++gi;
    }
    out += "</g>\n</svg>\n";
    return out;
}

void render_svg(const std::vector<ResourceRecord>& records,
                const std::string& y_field,
                const std::optional<std::string>& group_by,
                const std::string& path) {
    const std::string body = render_svg(records, y_field, group_by);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f.good()) throw io_error("write failed for '" + path + "'");
}

}  // namespace fracdimer
