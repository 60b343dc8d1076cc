#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "ifc/analysis.hpp"
#include "ifc/channel.hpp"
#include "ifc/errors.hpp"
#include "ifc/low_snr.hpp"
#include "ifc/rate_regions.hpp"

namespace ifc {

struct ConfigParseError : Error {
    explicit ConfigParseError(const std::string& what) : Error("ConfigParseError: " + what) {}
};

/// Locale-independent number formatting, 9 significant digits.
inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

/// dB values carry 5 decimal places in reports.
inline std::string format_db(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.5f", v);
    return buf;
}

/// Parses the flat key=value config text. Gains are given either as
/// power gains g11..g22 or as amplitudes c11..c22, never both.
/// '#' starts a comment; blank lines are ignored.
inline ChannelConfig parse_config_text(const std::string& text) {
    std::map<std::string, double> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        std::string stripped;
        for (char c : line)
            if (!is_space(c)) stripped += c;
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError("line " + std::to_string(lineno) + ": expected key=value");
        std::string key = stripped.substr(0, eq);
        std::string value = stripped.substr(eq + 1);
        std::size_t pos = 0;
        double parsed;
        try {
            parsed = std::stod(value, &pos);
        } catch (const std::exception&) {
            throw ConfigParseError("line " + std::to_string(lineno) + ": bad number '" + value + "'");
        }
        if (pos != value.size())
            throw ConfigParseError("line " + std::to_string(lineno) + ": bad number '" + value + "'");
        if (!kv.emplace(key, parsed).second)
            throw ConfigParseError("duplicate key '" + key + "'");
    }

    const bool has_g = kv.count("g11") || kv.count("g12") || kv.count("g21") || kv.count("g22");
    const bool has_c = kv.count("c11") || kv.count("c12") || kv.count("c21") || kv.count("c22");
    if (has_g && has_c) throw ConfigParseError("g-keys and c-keys are mutually exclusive");
    if (!has_g && !has_c) throw ConfigParseError("missing channel gains (g11..g22 or c11..c22)");

    auto require = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ConfigParseError("missing key '" + key + "'");
        return it->second;
    };

    ChannelConfig cfg;
    if (has_g) {
        cfg.g11 = require("g11");
        cfg.g12 = require("g12");
        cfg.g21 = require("g21");
        cfg.g22 = require("g22");
    } else {
        amplitude_to_power_gains(require("c11"), require("c12"), require("c21"), require("c22"),
                                 cfg.g11, cfg.g12, cfg.g21, cfg.g22);
    }
    cfg.sigma2 = require("sigma2");
    cfg.p1 = require("p1");
    cfg.p2 = require("p2");

    for (const auto& [key, value] : kv) {
        (void)value;
        static const char* known[] = {"g11", "g12", "g21", "g22", "c11", "c12",
                                      "c21", "c22", "sigma2", "p1", "p2"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigParseError("unknown key '" + key + "'");
    }
    return cfg;
}

inline ChannelConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

/// scheme,snr1,snr2,alpha,lambda,role,r1,r2 with empty cells for
/// parameters the scheme does not use.
inline void write_region_csv(std::ostream& out, const RegionBoundary& rb, RateUnits units) {
    out << "scheme,snr1,snr2,alpha,lambda,role,r1,r2\n";
    for (const RegionPoint& p : rb.points) {
        out << to_string(rb.scheme) << ',' << format_number(p.snr1) << ',' << format_number(p.snr2)
            << ',';
        if (!std::isnan(p.alpha)) out << format_number(p.alpha);
        out << ',';
        if (!std::isnan(p.lambda)) out << format_number(p.lambda);
        out << ',';
        if (p.has_role) out << to_string(p.role);
        out << ',' << format_number(convert_rate(p.rates.r1, RateUnits::nats, units)) << ','
            << format_number(convert_rate(p.rates.r2, RateUnits::nats, units)) << '\n';
    }
}

/// regime,scheme,param,s1,s2
inline void write_slope_csv(std::ostream& out, const SlopeRegionBoundary& b) {
    out << "regime,scheme,param,s1,s2\n";
    for (const SlopePoint& p : b.points)
        out << to_string(b.regime) << ',' << to_string(b.scheme) << ',' << format_number(p.param)
            << ',' << format_number(p.s1) << ',' << format_number(p.s2) << '\n';
}

/// user,regime,eb_linear,eb_db
inline void write_eb_csv(std::ostream& out, const ValidatedConfig& cfg) {
    out << "user,regime,eb_linear,eb_db\n";
    for (Regime regime : {Regime::secrecy, Regime::no_secrecy}) {
        if (regime == Regime::secrecy && !cfg.margin().both_positive()) continue;
        auto [eb1, eb2] = eb_n0_min(cfg, regime);
        out << "1," << to_string(regime) << ',' << format_number(eb1) << ',' << format_db(to_db(eb1))
            << '\n';
        out << "2," << to_string(regime) << ',' << format_number(eb2) << ',' << format_db(to_db(eb2))
            << '\n';
    }
}

/// Flat key-value block for human consumption and scripting alike.
inline void write_verdict_report(std::ostream& out, const SchemeVerdict& sv) {
    out << "phi=" << format_number(sv.phi) << '\n'
        << "phi0=" << format_number(sv.phi0) << '\n'
        << "verdict_secrecy=" << to_string(sv.verdict_secrecy) << '\n'
        << "verdict_no_secrecy=" << to_string(sv.verdict_no_secrecy) << '\n'
        << "divergent=" << (sv.divergent ? "true" : "false") << '\n';
}

inline void write_verdict_csv(std::ostream& out, const SchemeVerdict& sv) {
    out << "phi,phi0,verdict_secrecy,verdict_no_secrecy,divergent\n"
        << format_number(sv.phi) << ',' << format_number(sv.phi0) << ','
        << to_string(sv.verdict_secrecy) << ',' << to_string(sv.verdict_no_secrecy) << ','
        << (sv.divergent ? "true" : "false") << '\n';
}

inline void write_penalty_report(std::ostream& out, const PenaltyReport& pr) {
    out << "delta_eb_1_db=" << format_db(pr.delta_eb_1) << '\n'
        << "delta_eb_2_db=" << format_db(pr.delta_eb_2) << '\n'
        << "slope_shrink_tdma=" << format_number(pr.slope_shrink_tdma) << '\n'
        << "slope_shrink_mux=" << format_number(pr.slope_shrink_mux) << '\n';
}

inline void write_penalty_csv(std::ostream& out, const PenaltyReport& pr) {
    out << "delta_eb_1_db,delta_eb_2_db,slope_shrink_tdma,slope_shrink_mux\n"
        << format_db(pr.delta_eb_1) << ',' << format_db(pr.delta_eb_2) << ','
        << format_number(pr.slope_shrink_tdma) << ',' << format_number(pr.slope_shrink_mux) << '\n';
}

} // namespace ifc
