#include "ghzsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ghzsim {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
    for (const std::string& line : comments)
        out << "# " << line << "\n";
}

} // namespace

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows, int n_atoms,
                     const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << "t";
    for (int n = 1; n <= 4 * n_atoms - 1; n += 2)
        out << ",P_" << n;
    out << ",P_excited_total,P_fiber_total,fidelity,norm_or_trace\n";
    for (const TraceRow& row : rows) {
        out << format_number(row.t);
        for (double p : row.dark_populations)
            out << ',' << format_number(p);
        out << ',' << format_number(row.excited_total) << ',' << format_number(row.fiber_total)
            << ',' << format_number(row.fidelity) << ',' << format_number(row.norm_or_trace)
            << '\n';
    }
}

void write_dark_csv(std::ostream& out, const std::vector<DarkTraceRow>& rows, int n_atoms,
                    const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << "t,X,G";
    for (int n = 1; n <= 4 * n_atoms - 1; n += 2)
        out << ",c" << n << "_sq";
    out << ",gap\n";
    for (const DarkTraceRow& row : rows) {
        out << format_number(row.t) << ',' << format_number(row.x_ratio) << ','
            << format_number(row.g_ratio);
        for (double p : row.support_populations)
            out << ',' << format_number(p);
        out << ',' << format_number(row.gap) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    const char* x_name = name_of(result.spec.x.param);
    const char* y_name = name_of(result.spec.y.param);
    out << "x_name,y_name,x,y,fidelity\n";
    for (const SweepPoint& point : result.points)
        out << x_name << ',' << y_name << ',' << format_number(point.x) << ','
            << format_number(point.y) << ',' << format_number(point.fidelity) << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out.flush())
        throw std::runtime_error("failed writing " + path);
}

} // namespace ghzsim
