#include "selfaffine/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace selfaffine {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void dump(const Json& j, std::string& out) {
    switch (j.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ',';
            first = false;
            out += Json(key).dump();
            out += ':';
            dump(value, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first) out += ',';
            first = false;
            dump(value, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_number(v) : "null";
        break;
    }
    default:
        out += j.dump();
    }
}

Json digits_json(const std::vector<int>& digits) {
    Json arr = Json::array();
    for (int d : digits) arr.push_back(d);
    return arr;
}

std::string row(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line + '\n';
}

} // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump(j, out);
    return out;
}

Json to_json(const DerivativeClass& c) {
    Json j;
    j["tag"] = to_string(c.tag);
    j["gamma"] = c.gamma;
    if (c.M) {
        j["M"] = *c.M;
    } else {
        j["M"] = "INFINITE";
    }
    if (c.conditions) {
        j["T_values"] = {{"T", c.conditions->T},
                         {"T_bar", c.conditions->T_bar},
                         {"cond7", c.conditions->cond7},
                         {"cond8", c.conditions->cond8}};
    } else {
        j["T_values"] = nullptr;
    }
    return j;
}

Json to_json(const EntropyBounds& e) {
    return {{"depth", e.depth}, {"lower", e.lower}, {"upper", e.upper}};
}

Json to_json(const Thresholds& t) {
    return {{"N", t.N},
            {"a_min", t.a_min},
            {"a0_tilde", t.a0_tilde},
            {"a0_star", t.a0_star},
            {"a_inf_hat", t.a_inf_hat},
            {"a_inf_star", t.a_inf_star},
            {"beta_c", t.beta_c},
            {"G", t.golden}};
}

Json to_json(const DimensionReport& r) {
    Json j;
    j["N"] = r.N;
    j["a"] = r.a;
    j["regime"] = to_string(r.regime);
    if (r.lower == r.upper) {
        j["value"] = r.lower;
    } else {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
    }
    if (r.depth > 0) j["depth"] = r.depth;
    if (r.at_threshold) {
        j["at_threshold"] = true;
        Json n = Json::array();
        for (Regime g : r.neighbors) n.push_back(to_string(g));
        j["neighbors"] = n;
    }
    return j;
}

Json to_json(const GraphSample& g) {
    Json arr = Json::array();
    for (const auto& [x, y] : g.points) arr.push_back(Json::array({x, y}));
    return arr;
}

Json to_json(const std::vector<ProbeRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"h", r.h}, {"right_quotient", r.right}, {"left_quotient", r.left}});
    }
    return arr;
}

namespace {

Json point_json(const DinfPoint& p) {
    return {{"x", to_string(p.x)},
            {"value", static_cast<double>(to_long_double(p.x))},
            {"digits", p.digits.to_string()},
            {"v", digits_json(p.prefix)},
            {"omega", p.omega.to_string()},
            {"tag", to_string(p.tag)}};
}

} // namespace

Json to_json(const DinfEnumeration& e) {
    Json points = Json::array();
    for (const auto& p : e.points) points.push_back(point_json(p));
    Json rejected = Json::array();
    for (const auto& r : e.rejected) {
        Json j = point_json(r.candidate);
        j["reason"] = r.reason;
        rejected.push_back(j);
    }
    return {{"points", points}, {"rejected", rejected}};
}

namespace {

Json asymptotic_row(const AsymptoticRow& r) {
    return {{"N", r.N},
            {"a_min", r.a_min},
            {"a0_tilde", r.a0_tilde},
            {"a0_star", r.a0_star},
            {"a_inf_hat", r.a_inf_hat},
            {"a_inf_star", r.a_inf_star}};
}

} // namespace

Json to_json(const AsymptoticReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(asymptotic_row(row));
    Json limits = asymptotic_row(r.limits);
    limits.erase("N");
    return {{"rows", rows}, {"limits", limits}, {"deltas", asymptotic_row(r.deltas)}};
}

Json to_json(const QuasiGreedy& q) {
    Json j;
    if (q.sequence) {
        j["alpha"] = q.sequence->to_string();
    } else {
        j["alpha"] = nullptr;
    }
    j["prefix"] = digits_json(q.prefix);
    j["truncated"] = q.truncated;
    return j;
}

std::string thresholds_csv(const std::vector<Thresholds>& rows) {
    std::string out = "N,a_min,a0_tilde,a0_star,a_inf_hat,a_inf_star\n";
    for (const auto& t : rows) {
        out += row({std::to_string(t.N), format_number(t.a_min), format_number(t.a0_tilde), format_number(t.a0_star),
                    format_number(t.a_inf_hat), format_number(t.a_inf_star)});
    }
    return out;
}

std::string graph_csv(const GraphSample& g) {
    std::string out = "x,F\n";
    for (const auto& [x, y] : g.points) out += row({format_number(x), format_number(y)});
    return out;
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::string out = "n,h,right_quotient,left_quotient\n";
    for (const auto& r : rows) {
        out += row({std::to_string(r.n), format_number(r.h), format_number(r.right), format_number(r.left)});
    }
    return out;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& curve) {
    std::string out = "a,dim\n";
    for (const auto& [a, d] : curve) out += row({format_number(a), format_number(d)});
    return out;
}

std::string asymptotics_csv(const AsymptoticReport& r) {
    std::string out = "N,N*a_min,N*a0_tilde,N*a0_star,N*a_inf_hat,N*a_inf_star\n";
    for (const auto& a : r.rows) {
        out += row({std::to_string(a.N), format_number(a.a_min), format_number(a.a0_tilde), format_number(a.a0_star),
                    format_number(a.a_inf_hat), format_number(a.a_inf_star)});
    }
    const auto& l = r.limits;
    out += row({"limit", format_number(l.a_min), format_number(l.a0_tilde), format_number(l.a0_star),
                format_number(l.a_inf_hat), format_number(l.a_inf_star)});
    const auto& d = r.deltas;
    out += row({"delta", format_number(d.a_min), format_number(d.a0_tilde), format_number(d.a0_star),
                format_number(d.a_inf_hat), format_number(d.a_inf_star)});
    return out;
}

std::string dinf_csv(const DinfEnumeration& e) {
    std::string out = "x,value,digits,v,omega,tag\n";
    for (const auto& p : e.points) {
        std::string v;
        for (int d : p.prefix) v += (v.empty() ? "" : " ") + std::to_string(d);
        out += row({to_string(p.x), format_number(static_cast<double>(to_long_double(p.x))), p.digits.to_string(), v,
                    p.omega.to_string(), to_string(p.tag)});
    }
    return out;
}

} // namespace selfaffine
