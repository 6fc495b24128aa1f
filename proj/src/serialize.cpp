#include "sgt/serialize.hpp"

#include <stdexcept>

namespace sgt {

Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array");
    std::vector<Int> coeffs;
    for (const Json& e : j) coeffs.emplace_back(e.get<std::string>());
    return IntPoly(std::move(coeffs));
}

Json algnum_to_json(const AlgNum& a) {
    Json j;
    j["poly"] = poly_to_json(a.poly());
    j["lo"] = rat_to_string(a.lo());
    j["hi"] = rat_to_string(a.hi());
    j["approx"] = a.approx();
    return j;
}

AlgNum algnum_from_json(const Json& j) {
    IntPoly p = poly_from_json(j.at("poly"));
    Rat lo = rat_from_string(j.at("lo").get<std::string>());
    Rat hi = rat_from_string(j.at("hi").get<std::string>());
    if (lo == hi) return AlgNum::rational(lo);
    return AlgNum::root_of(p, lo, hi);
}

Json spectrum_to_json(const SpectrumSummary& s) {
    Json arr = Json::array();
    for (const SpectrumEntry& e : s) {
        Json entry;
        entry["value"] = algnum_to_json(e.value);
        entry["mult"] = e.mult;
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back(Json::array({e.first, e.second}));
    return arr;
}

Json matching_to_json(const MatchingResult& m) {
    Json j;
    j["size"] = m.size;
    j["witness"] = edges_to_json(m.witness);
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["tag"] = c.tag_name();
    j["extremal"] = c.extremal();
    switch (c.tag) {
        case Classification::Tag::C3aaa:
            j["a"] = c.a;
            break;
        case Classification::Tag::Caterpillar456:
            j["diameter"] = c.diameter;
            j["backbone"] = c.backbone;
            break;
        case Classification::Tag::Thm12FormB:
        case Classification::Tag::Thm32Form:
        case Classification::Tag::Thm33Form: {
            j["w"] = c.w;
            j["s"] = c.s;
            if (c.t >= 0) j["t"] = c.t;
            if (!c.cyclic_part_a.empty()) j["cyclic_part_a"] = c.cyclic_part_a;
            Json iso = Json::array();
            for (int v = 0; v < 64; ++v)
                if ((c.isolated >> v) & 1u) iso.push_back(v);
            j["isolated"] = std::move(iso);
            break;
        }
        default:
            break;
    }
    return j;
}

AlgNum parse_eigenvalue_spec(const std::string& spec) {
    if (spec.rfind("poly:", 0) == 0) {
        const auto semi = spec.find(";interval:");
        if (semi == std::string::npos)
            throw std::invalid_argument(
                "eigenvalue spec: expected 'poly:c0,c1,...;interval:lo,hi'");
        std::string coeff_part = spec.substr(5, semi - 5);
        std::string ival_part = spec.substr(semi + 10);
        std::vector<Int> coeffs;
        size_t pos = 0;
        while (pos <= coeff_part.size()) {
            size_t comma = coeff_part.find(',', pos);
            if (comma == std::string::npos) comma = coeff_part.size();
            std::string tok = coeff_part.substr(pos, comma - pos);
            if (tok.empty()) throw std::invalid_argument("eigenvalue spec: empty coefficient");
            coeffs.emplace_back(tok);
            pos = comma + 1;
            if (comma == coeff_part.size()) break;
        }
        const auto comma = ival_part.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("eigenvalue spec: interval needs 'lo,hi'");
        Rat lo = rat_from_string(ival_part.substr(0, comma));
        Rat hi = rat_from_string(ival_part.substr(comma + 1));
        IntPoly p(std::move(coeffs));
        if (lo == hi) return AlgNum::rational(lo);
        return AlgNum::root_of(p, lo, hi);
    }
    return AlgNum::rational(rat_from_string(spec));
}

}  // namespace sgt
