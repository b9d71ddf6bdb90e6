// JSON serialization. Keys are emitted in a fixed order (nlohmann's
// ordered_json) so equal values always render to identical text; the CLI
// relies on that for bit-stable output.

#include "katona/json_io.hpp"
#include "katona/errors.hpp"

#include "json.hpp"

#include <algorithm>

namespace katona {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, int indent) {
    return indent >= 0 ? j.dump(indent) : j.dump();
}

Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("malformed JSON input");
    return j;
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DomainError(std::string("JSON object needs integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array())
        throw DomainError(std::string(what) + " must be a JSON array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw DomainError(std::string(what) + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Json rational_json(const Rational& r) {
    Json j;
    j["fraction"] = fraction_string(r);
    j["decimal"] = decimal_string(r);
    return j;
}

Json arc_family_json(const ArcFamily& fam) {
    Json levels = Json::object();
    for (const auto& [k, heads] : fam.levels()) {
        Json hs = Json::array();
        for (int h = 1; h <= fam.n(); ++h)
            if (heads >> (h - 1) & 1) hs.push_back(h);
        levels[std::to_string(k)] = std::move(hs);
    }
    Json j;
    j["n"] = fam.n();
    j["levels"] = std::move(levels);
    return j;
}

Json set_family_json(const SetFamily& fam) {
    Json members = Json::array();
    for (std::uint64_t m : fam.members()) {
        Json pts = Json::array();
        for (int p = 1; p <= fam.n(); ++p)
            if (m >> (p - 1) & 1) pts.push_back(p);
        members.push_back(std::move(pts));
    }
    Json j;
    j["n"] = fam.n();
    j["members"] = std::move(members);
    return j;
}

ArcFamily arc_family_from(const Json& j) {
    GroundSet g(get_int(j, "n"));
    ArcFamily fam(g);
    if (!j.contains("levels") || !j["levels"].is_object())
        throw DomainError("arc family JSON needs a 'levels' object");
    for (const auto& [key, val] : j["levels"].items()) {
        int k = 0;
        try {
            std::size_t pos = 0;
            k = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw DomainError("arc level keys must be integers, got '" + key + "'");
        }
        for (int h : int_list(val, "head list"))
            fam.insert({h, k});
    }
    return fam;
}

SetFamily set_family_from(const Json& j) {
    GroundSet g(get_int(j, "n"));
    if (!j.contains("members") || !j["members"].is_array())
        throw DomainError("set family JSON needs a 'members' array");
    std::vector<std::vector<int>> sets;
    for (const auto& s : j["members"]) sets.push_back(int_list(s, "member"));
    return SetFamily::from_sets(g, sets);
}

Json witness_tuples_json(const std::vector<std::vector<ArcFamily>>& tuples) {
    Json out = Json::array();
    for (const auto& tup : tuples) {
        Json row = Json::array();
        for (const auto& fam : tup) row.push_back(arc_family_json(fam));
        out.push_back(std::move(row));
    }
    return out;
}

Json search_report_json(const SearchReport& rep) {
    Json j;
    j["optimum"] = rational_json(rep.optimum);
    j["feasible"] = rep.feasible;
    j["witness_count"] = rep.witnesses.size();
    j["witnesses"] = witness_tuples_json(rep.witnesses);
    j["nodes"] = rep.nodes;
    j["seconds"] = rep.seconds;
    return j;
}

Json params_json(const TheoremParams& p) {
    Json j;
    j["n"] = p.n;
    if (p.k) j["k"] = p.k;
    if (p.l) j["l"] = p.l;
    if (p.s) j["s"] = p.s;
    if (p.r) j["r"] = p.r;
    if (p.c != 1) j["c"] = fraction_string(p.c);
    if (!p.lengths.empty()) j["lengths"] = p.lengths;
    return j;
}

} // namespace

std::string to_json_string(const ArcFamily& fam, int indent) {
    return dump(arc_family_json(fam), indent);
}

ArcFamily arc_family_from_json(const std::string& text) {
    return arc_family_from(parse(text));
}

std::string to_json_string(const SetFamily& fam, int indent) {
    return dump(set_family_json(fam), indent);
}

SetFamily set_family_from_json(const std::string& text) {
    return set_family_from(parse(text));
}

std::string to_json_string(const Rational& r, int indent) {
    return dump(rational_json(r), indent);
}

std::string to_json_string(const SearchProblem& prob, int indent) {
    Json j;
    j["n"] = prob.ground.n;
    Json slots = Json::array();
    for (const auto& s : prob.slots) {
        Json sj;
        sj["levels"] = s.levels;
        slots.push_back(std::move(sj));
    }
    j["slots"] = std::move(slots);
    Json preds = Json::array();
    for (const auto& app : prob.predicate) {
        Json pj;
        pj["id"] = app.pred.to_string();
        pj["slots"] = app.slots;
        preds.push_back(std::move(pj));
    }
    j["predicates"] = std::move(preds);
    if (!prob.weights.empty()) {
        Json ws = Json::array();
        for (const auto& w : prob.weights) ws.push_back(fraction_string(w));
        j["weights"] = std::move(ws);
    }
    if (!prob.nonempty_slots.empty()) j["nonempty_slots"] = prob.nonempty_slots;
    if (!prob.chains.empty()) j["chains"] = prob.chains;
    if (!prob.level_caps.empty()) {
        Json caps = Json::array();
        for (const auto& c : prob.level_caps) {
            Json cj;
            cj["slot"] = c.slot;
            cj["level"] = c.level;
            cj["cap"] = c.cap;
            caps.push_back(std::move(cj));
        }
        j["level_caps"] = std::move(caps);
    }
    if (!prob.head_caps.empty()) {
        Json caps = Json::array();
        for (const auto& c : prob.head_caps) {
            Json cj;
            cj["slot"] = c.slot;
            cj["cap"] = c.cap;
            caps.push_back(std::move(cj));
        }
        j["head_caps"] = std::move(caps);
    }
    return dump(j, indent);
}

SearchProblem search_problem_from_json(const std::string& text) {
    Json j = parse(text);
    SearchProblem prob;
    prob.ground = GroundSet(get_int(j, "n"));
    if (!j.contains("slots") || !j["slots"].is_array() || j["slots"].empty())
        throw DomainError("search problem JSON needs a non-empty 'slots' array");
    for (const auto& sj : j["slots"]) {
        SlotSpec spec;
        if (!sj.contains("levels"))
            throw DomainError("each slot needs a 'levels' array");
        spec.levels = int_list(sj["levels"], "slot levels");
        prob.slots.push_back(std::move(spec));
    }
    if (j.contains("predicates")) {
        if (!j["predicates"].is_array())
            throw DomainError("'predicates' must be an array");
        for (const auto& pj : j["predicates"]) {
            PredicateApplication app;
            if (!pj.contains("id") || !pj["id"].is_string())
                throw DomainError("each predicate needs a string 'id'");
            app.pred = PredicateId::parse(pj["id"].get<std::string>());
            app.slots = pj.contains("slots")
                            ? int_list(pj["slots"], "predicate slots")
                            : std::vector<int>{0};
            prob.predicate.push_back(std::move(app));
        }
    }
    if (j.contains("weights")) {
        if (!j["weights"].is_array())
            throw DomainError("'weights' must be an array of fraction strings");
        for (const auto& w : j["weights"]) {
            if (!w.is_string())
                throw DomainError("weights must be fraction strings like \"5/2\"");
            prob.weights.push_back(rational_from_string(w.get<std::string>()));
        }
    }
    if (j.contains("nonempty_slots"))
        prob.nonempty_slots = int_list(j["nonempty_slots"], "nonempty_slots");
    if (j.contains("chains")) {
        if (!j["chains"].is_array()) throw DomainError("'chains' must be an array");
        for (const auto& c : j["chains"])
            prob.chains.push_back(int_list(c, "chain"));
    }
    if (j.contains("level_caps")) {
        if (!j["level_caps"].is_array())
            throw DomainError("'level_caps' must be an array");
        for (const auto& cj : j["level_caps"])
            prob.level_caps.push_back(
                {get_int(cj, "slot"), get_int(cj, "level"), get_int(cj, "cap")});
    }
    if (j.contains("head_caps")) {
        if (!j["head_caps"].is_array())
            throw DomainError("'head_caps' must be an array");
        for (const auto& cj : j["head_caps"])
            prob.head_caps.push_back({get_int(cj, "slot"), get_int(cj, "cap")});
    }
    return prob;
}

std::string to_json_string(const SearchReport& rep, int indent) {
    return dump(search_report_json(rep), indent);
}

std::string verify_report_json(const std::string& theorem_id,
                               const TheoremParams& params,
                               const TheoremResult& result, int indent) {
    Json j;
    j["theorem"] = theorem_id;
    j["params"] = params_json(params);
    j["bound"] = rational_json(result.bound);
    j["achieved"] = rational_json(result.achieved);
    j["tight"] = result.tight;
    if (result.informational) j["informational"] = true;
    j["witness_count"] =
        result.witnesses.size() + result.set_witnesses.size();
    if (!result.witnesses.empty())
        j["witnesses"] = witness_tuples_json(result.witnesses);
    if (!result.set_witnesses.empty()) {
        Json sw = Json::array();
        for (const auto& fam : result.set_witnesses)
            sw.push_back(set_family_json(fam));
        j["set_witnesses"] = std::move(sw);
    }
    if (!result.notes.empty()) j["notes"] = result.notes;
    j["nodes"] = result.nodes;
    j["seconds"] = result.seconds;
    return dump(j, indent);
}

std::string to_json_string(const AverageReport& rep, int indent) {
    Json j;
    j["average"] = rational_json(rep.average);
    j["max_trace"] = rep.max_trace;
    j["argmax_arrangement"] = rep.argmax.arrangement;
    j["order_count"] = rep.order_count.str();
    return dump(j, indent);
}

std::string to_json_string(const SampleReport& rep, int indent) {
    Json j;
    j["estimate"] = rational_json(rep.estimate);
    j["exact_target"] = rational_json(rep.exact_target);
    j["std_error"] = rep.std_error;
    j["trials"] = rep.trials;
    return dump(j, indent);
}

SetFamily any_family_from_json(const std::string& text) {
    Json j = parse(text);
    if (j.contains("levels")) {
        ArcFamily fam = arc_family_from(j);
        SetFamily out(fam.ground());
        for (std::uint64_t bits : fam.realize_bits()) out.insert_bits(bits);
        return out;
    }
    return set_family_from(j);
}

} // namespace katona
