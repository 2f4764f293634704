#include "basiskit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace basiskit::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    return in;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SchemaError(context + ": bad numeric value '" + s + "'");
    }
}

std::int64_t parse_ts(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SchemaError(context + ": bad timestamp '" + s + "'");
    }
}

void expect_header(std::ifstream& in, const std::string& expected, const std::string& path) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != expected)
        throw SchemaError(path + ": expected header '" + expected + "'");
}

TradeSide parse_side(const std::string& s, const std::string& context) {
    if (s == "buy") return TradeSide::BuyBasis;
    if (s == "sell") return TradeSide::SellBasis;
    throw SchemaError(context + ": side must be 'buy' or 'sell', got '" + s + "'");
}

}  // namespace

PriceSeries read_price_csv(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "timestamp_utc,price", path);
    PriceSeries series;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 2) throw SchemaError(path + ": expected 2 columns");
        series.points.push_back({parse_ts(cols[0], path), parse_double(cols[1], path)});
    }
    series.validate();
    return series;
}

FundingSeries read_funding_csv(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "timestamp_utc,rate_fraction", path);
    FundingSeries series;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 2) throw SchemaError(path + ": expected 2 columns");
        series.points.push_back({parse_ts(cols[0], path), parse_double(cols[1], path)});
    }
    series.validate();
    return series;
}

std::vector<TradeRecord> read_trades_csv(const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "timestamp_utc,side,notional_usd,target_cost_bps,realized_cost_bps",
                  path);
    std::vector<TradeRecord> trades;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 5) throw SchemaError(path + ": expected 5 columns");
        TradeRecord t;
        t.timestamp = parse_ts(cols[0], path);
        t.side = parse_side(cols[1], path);
        t.notional = parse_double(cols[2], path);
        if (t.notional <= 0.0) throw SchemaError(path + ": notional must be > 0");
        t.target_cost_bps = parse_double(cols[3], path);
        t.realized_cost_bps = parse_double(cols[4], path);
        trades.push_back(t);
    }
    return trades;
}

std::vector<std::pair<TradeSide, CostCurveSample>> read_cost_curve_csv(
    const std::string& path) {
    auto in = open_or_throw(path);
    expect_header(in, "timestamp_utc,side,notional_usd,cost_bps", path);
    std::vector<std::pair<TradeSide, CostCurveSample>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 4) throw SchemaError(path + ": expected 4 columns");
        CostCurveSample s;
        s.timestamp = parse_ts(cols[0], path);
        s.notional = parse_double(cols[2], path);
        s.cost_bps = parse_double(cols[3], path);
        out.emplace_back(parse_side(cols[1], path), s);
    }
    return out;
}

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

std::string Table::render(TableFormat format) const {
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        auto emit = [&out](const std::vector<std::string>& cols) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i) out << ',';
                out << cols[i];
            }
            out << '\n';
        };
        emit(header);
        for (const auto& row : rows) emit(row);
        return out.str();
    }

    std::vector<std::size_t> widths(header.size(), 0);
    auto widen = [&widths](const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], cols[i].size());
    };
    widen(header);
    for (const auto& row : rows) widen(row);
    auto emit = [&](const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out << "  ";
            out << cols[i];
            for (std::size_t k = cols[i].size(); k < widths[i]; ++k) out << ' ';
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

RunConfig RunConfig::load(const std::string& path) {
    auto in = open_or_throw(path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SchemaError(path + ": expected key = value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        cfg.raw[key] = value;
    }

    auto get = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = cfg.raw.find(key);
        if (it == cfg.raw.end()) return std::nullopt;
        return it->second;
    };

    if (auto v = get("venues")) {
        cfg.venues.clear();
        for (const auto& entry : split(*v, ',')) {
            const auto parts = split(entry, ':');
            if (parts.size() < 3) throw SchemaError(path + ": venue entry 'name:Lmax:rule'");
            VenueConfig venue;
            venue.name = parts[0];
            venue.max_leverage = static_cast<int>(parse_double(parts[1], path));
            if (parts[2] == "half")
                venue.rule = MaintenanceRule::HalfOfInitial;
            else if (parts[2] == "full")
                venue.rule = MaintenanceRule::FullInitial;
            else {
                venue.rule = MaintenanceRule::CustomFraction;
                venue.custom_fraction = parse_double(parts[2], path);
            }
            cfg.venues.push_back(venue);
        }
    }
    if (auto v = get("assets")) cfg.assets = split(*v, ',');
    if (auto v = get("lookback_days")) cfg.lookback_days = static_cast<int>(parse_double(*v, path));
    if (auto v = get("stress")) cfg.stress = parse_double(*v, path);
    if (auto v = get("epsilon")) cfg.epsilon = parse_double(*v, path);
    if (auto v = get("lgd")) cfg.lgd = parse_double(*v, path);
    if (auto v = get("h_days")) cfg.h_days = parse_double(*v, path);
    if (auto v = get("h_liq_hours")) cfg.h_liq_hours = parse_double(*v, path);
    if (auto v = get("eps_liq")) cfg.eps_liq = parse_double(*v, path);
    if (auto v = get("k_reb_bps")) {
        cfg.k_reb_bps.clear();
        for (const auto& s : split(*v, ',')) cfg.k_reb_bps.push_back(parse_double(s, path));
    }
    if (auto v = get("decision_horizon_days"))
        cfg.decision_horizon_days = static_cast<int>(parse_double(*v, path));
    if (auto v = get("q_min")) cfg.q_min = parse_double(*v, path);
    if (auto v = get("seed")) cfg.seed = static_cast<std::uint64_t>(std::stoull(*v));
    if (auto v = get("initial_aum")) cfg.initial_aum = parse_double(*v, path);
    if (auto v = get("mu")) cfg.mu = parse_double(*v, path);

    const bool lookback_ok = cfg.lookback_days == 30 || cfg.lookback_days == 90 ||
                             cfg.lookback_days == 180 || cfg.lookback_days == 360;
    if (!lookback_ok) throw SchemaError(path + ": lookback_days must be one of 30,90,180,360");
    if (cfg.stress != 1.0 && cfg.stress != 1.5 && cfg.stress != 2.0)
        throw SchemaError(path + ": stress must be one of 1.0,1.5,2.0");
    return cfg;
}

std::optional<std::string> RunConfig::path_for(const std::string& group,
                                               const std::string& kind,
                                               const std::string& asset) const {
    const auto it = raw.find(group + "." + kind + "." + asset);
    if (it == raw.end()) return std::nullopt;
    return it->second;
}

}  // namespace basiskit::io
