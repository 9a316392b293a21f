#include "fracdimer/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "fracdimer/errors.hpp"

namespace fracdimer {

const char* const kCsvHeader =
    "t,tau,nu1,nu2,v12,p,norm_sq,coherence,negativity,log_negativity,"
    "concurrence,chsh";

namespace {

void append_real(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

double parse_field(const std::string& s, int line) {
    if (s.empty()) throw parse_error(line, "empty field");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw parse_error(line, "invalid number '" + s + "'");
    return v;
}

}  // namespace

std::string to_csv(const std::vector<ResourceRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const ResourceRecord& r : records) {
        const double fields[12] = {r.t,          r.tau,        r.nu1,
                                   r.nu2,        r.v12,        r.p,
                                   r.norm_sq,    r.coherence,  r.negativity,
                                   r.log_negativity, r.concurrence, r.chsh};
        for (int i = 0; i < 12; ++i) {
            if (i) out += ',';
            append_real(out, fields[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<ResourceRecord>& records,
               const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    const std::string body = to_csv(records);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f.good()) throw io_error("write failed for '" + path + "'");
}

std::vector<ResourceRecord> parse_csv(const std::string& text) {
    std::vector<ResourceRecord> out;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string line = nl == std::string::npos
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
        ++line_no;
        pos = nl == std::string::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (pos < text.size())
                throw parse_error(line_no, "unexpected blank line");
            continue;
        }
        if (line_no == 1) {
            if (line != kCsvHeader)
                throw parse_error(1, "unexpected CSV header");
            continue;
        }
        double fields[12];
        size_t fpos = 0;
        for (int i = 0; i < 12; ++i) {
            const size_t comma = line.find(',', fpos);
            const bool last = i == 11;
            if (!last && comma == std::string::npos)
                throw parse_error(line_no, "expected 12 fields");
            if (last && comma != std::string::npos)
                throw parse_error(line_no, "expected 12 fields");
            const std::string cell =
                last ? line.substr(fpos) : line.substr(fpos, comma - fpos);
            fields[i] = parse_field(cell, line_no);
            fpos = comma + 1;
        }
        ResourceRecord r;
        r.t = fields[0];
        r.tau = fields[1];
        r.nu1 = fields[2];
        r.nu2 = fields[3];
        r.v12 = fields[4];
        r.p = fields[5];
        r.norm_sq = fields[6];
        r.coherence = fields[7];
        r.negativity = fields[8];
        r.log_negativity = fields[9];
        r.concurrence = fields[10];
        r.chsh = fields[11];
        out.push_back(r);
    }
    if (line_no == 0) throw parse_error(1, "empty CSV");
    return out;
}

std::vector<ResourceRecord> read_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    if (f.bad()) throw io_error("read failed for '" + path + "'");
    return parse_csv(text);
}

}  // namespace fracdimer
