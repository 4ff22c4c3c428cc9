#ifndef TERNARY_JSON_IO_HPP
#define TERNARY_JSON_IO_HPP

// nlohmann adl_serializer glue so reports round-trip through JSON.

#include <json.hpp>

#include "ternary/cosets.hpp"
#include "ternary/distance.hpp"
#include "ternary/factor.hpp"
#include "ternary/registry.hpp"
#include "ternary/theorems.hpp"

// bigint lives in boost's namespace, so plain ADL to_json/from_json
// overloads would not be found; specialize the serializer instead.
namespace nlohmann {
template <>
struct adl_serializer<ternary::bigint> {
    static void to_json(json& j, const ternary::bigint& v) { j = v.str(); }
    static void from_json(const json& j, ternary::bigint& v) {
        v = ternary::bigint(j.get<std::string>());
    }
};
}  // namespace nlohmann

namespace ternary {

using nlohmann::json;

inline void to_json(json& j, const TritPoly& p) { j = p.str(); }
inline void from_json(const json& j, TritPoly& p) {
    p = TritPoly::parse(j.get<std::string>());
}

inline void to_json(json& j, const Coset& c) {
    j = json{{"leader", c.leader}, {"members", c.members}};
}
inline void from_json(const json& j, Coset& c) {
    j.at("leader").get_to(c.leader);
    j.at("members").get_to(c.members);
}

inline void to_json(json& j, const WeightWitness& w) {
    j = json{{"weight", w.weight},
             {"support_exponents", w.support_exponents},
             {"coefficients", w.coefficients}};
}
inline void from_json(const json& j, WeightWitness& w) {
    j.at("weight").get_to(w.weight);
    j.at("support_exponents").get_to(w.support_exponents);
    j.at("coefficients").get_to(w.coefficients);
}

inline void to_json(json& j, const BoundReport& b) {
    j = json{{"n", b.n},         {"d", b.d},
             {"t", b.t},         {"r", b.r},
             {"exponent", b.exponent},
             {"denominator", b.denominator},
             {"k", b.k},         {"excluded", b.excluded}};
    if (b.bound) j["bound"] = *b.bound;
    if (b.code_size) j["code_size"] = *b.code_size;
}
inline void from_json(const json& j, BoundReport& b) {
    j.at("n").get_to(b.n);
    j.at("d").get_to(b.d);
    j.at("t").get_to(b.t);
    j.at("r").get_to(b.r);
    j.at("exponent").get_to(b.exponent);
    j.at("denominator").get_to(b.denominator);
    j.at("k").get_to(b.k);
    j.at("excluded").get_to(b.excluded);
    if (j.contains("bound")) b.bound = j.at("bound").get<bigint>();
    if (j.contains("code_size")) b.code_size = j.at("code_size").get<bigint>();
}

inline void to_json(json& j, const HypothesisCheck& c) {
    j = json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}
inline void from_json(const json& j, HypothesisCheck& c) {
    j.at("name").get_to(c.name);
    j.at("pass").get_to(c.pass);
    j.at("detail").get_to(c.detail);
}

inline void to_json(json& j, const Factorization& f) {
    j = json{{"unit", f.unit}, {"factors", json::array()}};
    for (const auto& part : f.factors)
        j["factors"].push_back({{"poly", part.poly}, {"mult", part.mult}});
}
inline void from_json(const json& j, Factorization& f) {
    j.at("unit").get_to(f.unit);
    f.factors.clear();
    for (const auto& part : j.at("factors"))
        f.factors.push_back({part.at("poly").get<TritPoly>(), part.at("mult").get<int>()});
}

inline void to_json(json& j, const KnownExponent& k) {
    j = json{{"rule", k.rule}, {"source", k.source}, {"e", k.e}};
    if (k.k) j["k"] = *k.k;
}
inline void from_json(const json& j, KnownExponent& k) {
    j.at("rule").get_to(k.rule);
    j.at("source").get_to(k.source);
    j.at("e").get_to(k.e);
    if (j.contains("k")) k.k = j.at("k").get<u64>();
}

inline const char* reduced_status_name(ReducedStatus s) {
    switch (s) {
        case ReducedStatus::Found: return "Found";
        case ReducedStatus::ParityFail: return "ParityFail";
        default: return "None";
    }
}
inline ReducedStatus reduced_status_from_name(const std::string& s) {
    if (s == "Found") return ReducedStatus::Found;
    if (s == "ParityFail") return ReducedStatus::ParityFail;
    return ReducedStatus::None;
}

inline void to_json(json& j, const TheoremReport& r) {
    j = json{{"theorem", theorem_name(r.id)},
             {"m", r.m},
             {"e", r.e},
             {"checks", r.checks},
             {"coset_size_e", r.coset_size_e},
             {"n", r.n},
             {"k", r.k},
             {"expected_k", r.expected_k},
             {"generator", r.generator},
             {"reduced_status", reduced_status_name(r.reduced_status)},
             {"oracle_agrees", r.oracle_agrees},
             {"verdict", verdict_name(r.verdict)}};
    if (r.h) j["h"] = *r.h;
    if (r.s) j["s"] = *r.s;
    if (r.weight3_witness) j["weight3_witness"] = *r.weight3_witness;
    if (r.optimality) j["optimality"] = *r.optimality;
    if (!r.note.empty()) j["note"] = r.note;
}
inline void from_json(const json& j, TheoremReport& r) {
    r.id = *theorem_from_name(j.at("theorem").get<std::string>());
    j.at("m").get_to(r.m);
    j.at("e").get_to(r.e);
    j.at("checks").get_to(r.checks);
    j.at("coset_size_e").get_to(r.coset_size_e);
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("expected_k").get_to(r.expected_k);
    r.generator = j.at("generator").get<TritPoly>();
    r.reduced_status = reduced_status_from_name(j.at("reduced_status").get<std::string>());
    j.at("oracle_agrees").get_to(r.oracle_agrees);
    const std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "Verified"  ? Verdict::Verified
                : v == "Refuted" ? Verdict::Refuted
                                 : Verdict::HypothesisFailed;
    r.h.reset();
    r.s.reset();
    r.weight3_witness.reset();
    r.optimality.reset();
    r.note.clear();
    if (j.contains("h")) r.h = j.at("h").get<unsigned>();
    if (j.contains("s")) r.s = j.at("s").get<u64>();
    if (j.contains("weight3_witness"))
        r.weight3_witness = j.at("weight3_witness").get<WeightWitness>();
    if (j.contains("optimality")) r.optimality = j.at("optimality").get<BoundReport>();
    if (j.contains("note")) j.at("note").get_to(r.note);
}

}  // namespace ternary

#endif
