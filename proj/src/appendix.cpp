#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "curious/mordell.hpp"

#ifndef CURIOUS_DEFAULT_APPENDIX
#define CURIOUS_DEFAULT_APPENDIX "data/appendix_points.txt"
#endif

namespace curious {

namespace {

Int parse_int(const std::string& token, unsigned lineno) {
    try {
        return Int(token);
    } catch (const std::exception&) {
        throw std::runtime_error("appendix line " + std::to_string(lineno) +
                                 ": bad integer '" + token + "'");
    }
}

}  // namespace

std::string default_appendix_path() {
    if (const char* env = std::getenv("CURIOUS_APPENDIX_PATH"); env && *env) {
        return env;
    }
    return CURIOUS_DEFAULT_APPENDIX;
}

AppendixData load_appendix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open appendix file: " + path);

    AppendixData data;
    std::string line;
    unsigned lineno = 0;
    bool have_row = false;
    AppendixRow row{FamilyKey(1, 0, 1), 0, 0, {}};

    auto flush = [&] {
        if (!have_row) return;
        std::sort(row.points.begin(), row.points.end());
        auto dup = std::adjacent_find(row.points.begin(), row.points.end());
        if (dup != row.points.end()) {
            throw std::runtime_error("duplicate point for " + row.family.display() +
                                     " j=" + std::to_string(row.j));
        }
        data.rows.push_back(row);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;

        if (tokens.size() == 5) {  // a b m j B
            flush();
            Int a = parse_int(tokens[0], lineno);
            Int b = parse_int(tokens[1], lineno);
            Int m = parse_int(tokens[2], lineno);
            Int j = parse_int(tokens[3], lineno);
            if (a < 1 || a > 9 || b < 0 || b > 9 || m < 1 || m > 1000 || j < 0 || j > 2) {
                throw std::runtime_error("appendix line " + std::to_string(lineno) +
                                         ": bad record header");
            }
            row = {FamilyKey(a.convert_to<int>(), b.convert_to<int>(),
                             m.convert_to<unsigned>()),
                   j.convert_to<unsigned>(), parse_int(tokens[4], lineno), {}};
            have_row = true;
        } else if (tokens.size() == 2) {  // x y
            if (!have_row) {
                throw std::runtime_error("appendix line " + std::to_string(lineno) +
                                         ": point before any record header");
            }
            Int x = parse_int(tokens[0], lineno);
            Int y = parse_int(tokens[1], lineno);
            if (y < 0) {
                data.warnings.push_back("normalized point (" + x.str() + ", " + y.str() +
                                        ") of " + row.family.display() + " j=" +
                                        std::to_string(row.j) + " to nonnegative y");
                y = -y;
            }
            row.points.push_back({std::move(x), std::move(y)});
        } else {
            throw std::runtime_error("appendix line " + std::to_string(lineno) +
                                     ": expected 5 header fields or an x y pair");
        }
    }
    flush();
    return data;
}

}  // namespace curious
