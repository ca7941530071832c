#include "abeltau/report.hpp"

#include "abeltau/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace abeltau {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

void check(const RunReport& report) {
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const RunRow& row = report.rows[k];
        if (static_cast<int>(row.errors.size()) != report.components ||
            static_cast<int>(row.tau_norms.size()) != report.components)
            raise(ErrorKind::internal, "report row width differs from component count");
        if (k > 0 && row.N <= report.rows[k - 1].N)
            raise(ErrorKind::domain, "report rows must have ascending N");
    }
}

} // namespace

std::string to_csv(const RunReport& report) {
    check(report);
    std::ostringstream out;
    out << "N";
    for (int i = 1; i <= report.components; ++i)
        out << ",e" << i;
    for (int i = 1; i <= report.components; ++i)
        out << ",tau" << i;
    out << ",residual,seconds\n";
    for (const RunRow& row : report.rows) {
        out << row.N;
        for (double e : row.errors)
            out << "," << sci(e);
        for (double t : row.tau_norms)
            out << "," << sci(t);
        out << "," << sci(row.residual) << "," << sci(row.seconds) << "\n";
    }
    return out.str();
}

std::string to_text_table(const RunReport& report) {
    check(report);
    std::vector<std::string> headers{"N"};
    for (int i = 1; i <= report.components; ++i)
        headers.push_back("e" + std::to_string(i));
    for (int i = 1; i <= report.components; ++i)
        headers.push_back("tau" + std::to_string(i));
    headers.push_back("residual");
    headers.push_back("seconds");

    std::vector<std::vector<std::string>> cells;
    for (const RunRow& row : report.rows) {
        std::vector<std::string> line{std::to_string(row.N)};
        for (double e : row.errors)
            line.push_back(sci(e));
        for (double t : row.tau_norms)
            line.push_back(sci(t));
        line.push_back(sci(row.residual));
        line.push_back(sci(row.seconds));
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& line : cells)
            width[c] = std::max(width[c], line[c].size());
    }

    std::ostringstream out;
    for (std::size_t c = 0; c < headers.size(); ++c)
        out << (c ? "  " : "") << std::string(width[c] - headers[c].size(), ' ') << headers[c];
    out << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c)
            out << (c ? "  " : "") << std::string(width[c] - line[c].size(), ' ') << line[c];
        out << "\n";
    }
    return out.str();
}

} // namespace abeltau
