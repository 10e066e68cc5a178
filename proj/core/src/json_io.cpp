#include "mumford/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace mumford {

using nlohmann::json;

Family family_from_name(const std::string& name) {
    for (Family f : {Family::Mumford, Family::EvenMumford, Family::PrymI, Family::PrymII,
                     Family::DLaxI, Family::DLaxII, Family::NYI, Family::NYII})
        if (name == family_name(f)) return f;
    throw Error("unknown family name: " + name);
}

namespace {

template <class S>
json scalar_to_json(const S& x) {
    if constexpr (is_exact_scalar_v<S>)
        return x.str();
    else
        return x;
}

template <class S>
S scalar_from_json(const json& j) {
    if constexpr (is_exact_scalar_v<S>) {
        if (j.is_string()) return Rational::from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
        throw Error("expected exact rational as string");
    } else {
        return j.get<double>();
    }
}

template <class S>
json vec_to_json(const std::vector<S>& v) {
    json a = json::array();
    for (const S& x : v) a.push_back(scalar_to_json(x));
    return a;
}

template <class S>
std::vector<S> vec_from_json(const json& a) {
    std::vector<S> out;
    for (const auto& j : a) out.push_back(scalar_from_json<S>(j));
    return out;
}

}  // namespace

template <class S>
std::string point_to_json(const MumfordLikePoint<S>& p) {
    json j;
    j["family"] = family_name(p.kind);
    j["g"] = p.g;
    j["u"] = vec_to_json(p.u);
    j["v"] = vec_to_json(p.v);
    j["w"] = vec_to_json(p.w);
    return j.dump();
}

template <class S>
std::string point_to_json(const DLaxPoint<S>& p) {
    json j;
    j["family"] = family_name(p.variant);
    j["g"] = p.g;
    std::vector<S> a = {p.a_half};
    a.insert(a.end(), p.a_tail.begin(), p.a_tail.end());
    j["a"] = vec_to_json(a);
    std::vector<S> b;
    if (p.variant == Family::DLaxII) b.push_back(p.b0);
    b.insert(b.end(), p.b_tail.begin(), p.b_tail.end());
    j["b"] = vec_to_json(b);
    j["c"] = vec_to_json(p.c_tail);
    j["d"] = vec_to_json(p.d_tail);
    if (p.variant == Family::DLaxII) j["b0"] = scalar_to_json(p.b0);
    return j.dump();
}

template <class S>
std::string point_to_json(const NYState<S>& p) {
    json j;
    j["family"] = family_name(p.variant);
    j["g"] = p.g;
    j["q"] = vec_to_json(p.q);
    j["e"] = vec_to_json(p.e);
    return j.dump();
}

Family family_of_json(const std::string& text) {
    return family_from_name(json::parse(text).at("family").get<std::string>());
}

template <class S>
MumfordLikePoint<S> mumford_like_from_json(const std::string& text) {
    const json j = json::parse(text);
    const Family kind = family_from_name(j.at("family").get<std::string>());
    if (!is_mumford_like(kind)) throw Error("not a Mumford-type family");
    auto p = MumfordLikePoint<S>::make(kind, j.at("g").get<int>());
    p.u = vec_from_json<S>(j.at("u"));
    p.v = vec_from_json<S>(j.at("v"));
    p.w = vec_from_json<S>(j.at("w"));
    for (const auto& msg : validate(p)) throw ShapeViolation(msg);
    return p;
}

template <class S>
DLaxPoint<S> dlax_from_json(const std::string& text) {
    const json j = json::parse(text);
    const Family kind = family_from_name(j.at("family").get<std::string>());
    if (!is_dlax(kind)) throw Error("not a Lax-chain family");
    auto p = DLaxPoint<S>::make(kind, j.at("g").get<int>());
    const auto a = vec_from_json<S>(j.at("a"));
    if (static_cast<int>(a.size()) != p.g + 1) throw ShapeViolation("a length mismatch");
    p.a_half = a[0];
    p.a_tail.assign(a.begin() + 1, a.end());
    auto b = vec_from_json<S>(j.at("b"));
    if (kind == Family::DLaxII) {
        if (static_cast<int>(b.size()) != p.g + 1) throw ShapeViolation("b length mismatch");
        p.b0 = b[0];
        p.b_tail.assign(b.begin() + 1, b.end());
    } else {
        if (static_cast<int>(b.size()) != p.g) throw ShapeViolation("b length mismatch");
        p.b_tail = b;
    }
    p.c_tail = vec_from_json<S>(j.at("c"));
    p.d_tail = vec_from_json<S>(j.at("d"));
    for (const auto& msg : validate(p)) throw ShapeViolation(msg);
    return p;
}

template <class S>
NYState<S> ny_from_json(const std::string& text) {
    const json j = json::parse(text);
    const Family kind = family_from_name(j.at("family").get<std::string>());
    if (!is_ny(kind)) throw Error("not a Noumi-Yamada family");
    auto p = NYState<S>::make(kind, j.at("g").get<int>());
    p.q = vec_from_json<S>(j.at("q"));
    p.e = vec_from_json<S>(j.at("e"));
    for (const auto& msg : validate(p)) throw ShapeViolation(msg);
    return p;
}

template std::string point_to_json<Rational>(const MumfordLikePoint<Rational>&);
template std::string point_to_json<double>(const MumfordLikePoint<double>&);
template std::string point_to_json<Rational>(const DLaxPoint<Rational>&);
template std::string point_to_json<double>(const DLaxPoint<double>&);
template std::string point_to_json<Rational>(const NYState<Rational>&);
template std::string point_to_json<double>(const NYState<double>&);
template MumfordLikePoint<Rational> mumford_like_from_json<Rational>(const std::string&);
template MumfordLikePoint<double> mumford_like_from_json<double>(const std::string&);
template DLaxPoint<Rational> dlax_from_json<Rational>(const std::string&);
template DLaxPoint<double> dlax_from_json<double>(const std::string&);
template NYState<Rational> ny_from_json<Rational>(const std::string&);
template NYState<double> ny_from_json<double>(const std::string&);

// ---------------------------------------------------------------------------
// Trajectory CSV
// ---------------------------------------------------------------------------

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream out;
    out.precision(17);
    out << "t";
    for (const auto& n : tr.coord_names) out << "," << n;
    for (const auto& n : tr.invariant_names) out << "," << n;
    out << "\n";
    for (size_t i = 0; i < tr.times.size(); ++i) {
        out << tr.times[i];
        for (double v : tr.states[i]) out << "," << v;
        if (i < tr.invariants.size())
            for (double v : tr.invariants[i]) out << "," << v;
        out << "\n";
    }
    return out.str();
}

Trajectory trajectory_from_csv(const std::string& csv) {
    Trajectory tr;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw Error("trajectory_from_csv: empty input");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    if (header.empty() || header[0] != "t") throw Error("trajectory_from_csv: bad header");
    size_t ninv = 0;
    for (const auto& h : header)
        if (h.rfind("f", 0) == 0 || h.rfind("tr", 0) == 0 || h.rfind("det", 0) == 0 ||
            h.rfind("h", 0) == 0 || h == "constraint")
            ++ninv;
    const size_t ncoord = header.size() - 1 - ninv;
    tr.coord_names.assign(header.begin() + 1, header.begin() + 1 + static_cast<long>(ncoord));
    tr.invariant_names.assign(header.begin() + 1 + static_cast<long>(ncoord), header.end());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != header.size()) throw Error("trajectory_from_csv: ragged row");
        tr.times.push_back(row[0]);
        tr.states.emplace_back(row.begin() + 1, row.begin() + 1 + static_cast<long>(ncoord));
        tr.invariants.emplace_back(row.begin() + 1 + static_cast<long>(ncoord), row.end());
    }
    return tr;
}

}  // namespace mumford
