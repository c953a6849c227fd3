#include "revwit/engine.hpp"

#include "revwit/structure.hpp"

namespace revwit {

using nlohmann::json;

namespace {

Element advance_cursor(const Structure& s, Big& cursor,
                       const std::function<bool(const Element&)>& covered) {
    for (;;) {
        if (auto limit = s.enumeration_limit(); limit && cursor >= *limit)
            throw InternalError(s.id() + ": enumeration exhausted while seeking a target");
        Element e = s.at(cursor);
        if (!covered(e)) return e;
        ++cursor;
    }
}

unsigned long long prefix_extent(const Structure& s, Big cursor,
                                 const std::function<bool(const Element&)>& covered) {
    for (;;) {
        if (auto limit = s.enumeration_limit(); limit && cursor >= *limit) break;
        if (!covered(s.at(cursor))) break;
        ++cursor;
    }
    return cursor.convert_to<unsigned long long>();
}

}  // namespace

Certificate run_generic(Structure& s, const std::string& strategy_id, const SeedSpec& seed_spec,
                        unsigned long long n_targets) {
    auto strat = make_strategy(s, strategy_id);
    PairList seed = build_seed(s, strategy_id, seed_spec);

    PartialCondensation m;
    for (const auto& [x, y] : seed) m.add(x, y);
    strat->init(m);

    auto bw = find_bad_witness(s, seed);
    if (!bw) throw SeedError("seed admits no witness pair");

    Certificate cert;
    cert.structure = s.id();
    cert.strategy = strategy_id;
    cert.invariant = strat->invariant();
    cert.seed = seed;
    cert.witness = *bw;

    auto dom_covered = [&](const Element& e) { return strat->dom_covers(m, e); };
    auto ran_covered = [&](const Element& e) { return strat->ran_covers(m, e); };

    Big dom_cursor = 0, ran_cursor = 0;
    for (unsigned long long k = 0; k < n_targets; ++k) {
        bool dom_side = (k % 2 == 0);
        Element target = dom_side ? advance_cursor(s, dom_cursor, dom_covered)
                                  : advance_cursor(s, ran_cursor, ran_covered);
        PairList added = dom_side ? strat->extend_dom(m, target) : strat->extend_ran(m, target);
        if (added.empty()) throw InternalError("strategy produced an empty step");
        auto rep = verify_extension(s, m, added);
        if (!rep.ok)
            throw InternalError("strategy broke the map at step " + std::to_string(k) + " (" +
                                rep.violations.front().kind + ")");
        for (const auto& [x, y] : added) m.add(x, y);
        if (dom_side ? !strat->dom_covers(m, target) : !strat->ran_covers(m, target))
            throw InternalError("step did not cover its target");
        cert.steps.push_back({dom_side ? "dom" : "ran", target, added});
    }

    // the witness must still be present: both pairs are seed pairs
    if (!s.leq(cert.witness.y1, cert.witness.y2) ||
        s.leq(cert.witness.x1, cert.witness.x2))
        throw InternalError("witness stopped witnessing");

    cert.final_pairs = m.pairs();
    if (auto b = strat->bounds()) cert.bounds = *b;
    cert.dom_prefix = prefix_extent(s, dom_cursor, dom_covered);
    cert.ran_prefix = prefix_extent(s, ran_cursor, ran_covered);
    return cert;
}

namespace {

json pairs_to_json(const PairList& pairs) {
    json arr = json::array();
    for (const auto& [x, y] : pairs) arr.push_back(json::array({x.enc, y.enc}));
    return arr;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
    json j;
    j["structure"] = c.structure;
    j["strategy"] = c.strategy;
    j["invariant"] = c.invariant;
    j["seed"] = pairs_to_json(c.seed);
    json steps = json::array();
    for (const auto& st : c.steps) {
        json s;
        s["kind"] = st.kind;
        s["target"] = st.target.enc;
        s["added"] = pairs_to_json(st.added);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["final"] = pairs_to_json(c.final_pairs);
    j["bad_witness"] = {{"x1", c.witness.x1.enc},
                        {"x2", c.witness.x2.enc},
                        {"y1", c.witness.y1.enc},
                        {"y2", c.witness.y2.enc}};
    if (c.bounds) {
        json b;
        if (c.bounds->p) b["p"] = c.bounds->p->enc;
        b["q"] = c.bounds->q.enc;
        j["bounds"] = std::move(b);
    }
    j["coverage"] = {{"dom_prefix", c.dom_prefix}, {"ran_prefix", c.ran_prefix}};
    return j;
}

namespace {

void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
    if (!j.is_object()) throw ParseError("certificate: " + where + " must be an object");
    for (const auto& k : required)
        if (!j.contains(k)) throw ParseError("certificate: " + where + " missing key '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const auto& k : required)
            if (it.key() == k) known = true;
        for (const auto& k : optional)
            if (it.key() == k) known = true;
        if (!known)
            throw ParseError("certificate: " + where + " has unknown key '" + it.key() + "'");
    }
}

std::string get_string(const json& j, const std::string& key, const std::string& where) {
    if (!j.at(key).is_string())
        throw ParseError("certificate: " + where + "." + key + " must be a string");
    return j.at(key).get<std::string>();
}

PairList pairs_from_json(const Structure& s, const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError("certificate: " + where + " must be an array");
    PairList out;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw ParseError("certificate: " + where + " entries must be [x, y] string pairs");
        out.emplace_back(s.parse(entry[0].get<std::string>()),
                         s.parse(entry[1].get<std::string>()));
    }
    return out;
}

unsigned long long get_count(const json& j, const std::string& key, const std::string& where) {
    if (!j.at(key).is_number_unsigned())
        throw ParseError("certificate: " + where + "." + key + " must be a non-negative integer");
    return j.at(key).get<unsigned long long>();
}

}  // namespace

Certificate certificate_from_json(const json& j) {
    require_keys(j,
                 {"structure", "strategy", "invariant", "seed", "steps", "final", "bad_witness",
                  "coverage"},
                 {"bounds"}, "top level");
    Certificate c;
    c.structure = get_string(j, "structure", "top level");
    c.strategy = get_string(j, "strategy", "top level");
    c.invariant = get_string(j, "invariant", "top level");
    auto s = make_structure(c.structure);

    c.seed = pairs_from_json(*s, j.at("seed"), "seed");
    if (!j.at("steps").is_array()) throw ParseError("certificate: steps must be an array");
    size_t idx = 0;
    for (const auto& stj : j.at("steps")) {
        require_keys(stj, {"kind", "target", "added"}, {}, "steps[" + std::to_string(idx) + "]");
        Step st;
        st.kind = get_string(stj, "kind", "step");
        if (st.kind != "dom" && st.kind != "ran")
            throw ParseError("certificate: step kind must be 'dom' or 'ran'");
        st.target = s->parse(get_string(stj, "target", "step"));
        st.added = pairs_from_json(*s, stj.at("added"), "steps[" + std::to_string(idx) + "].added");
        c.steps.push_back(std::move(st));
        ++idx;
    }
    c.final_pairs = pairs_from_json(*s, j.at("final"), "final");

    const json& w = j.at("bad_witness");
    require_keys(w, {"x1", "x2", "y1", "y2"}, {}, "bad_witness");
    c.witness = BadWitness{s->parse(get_string(w, "x1", "bad_witness")),
                           s->parse(get_string(w, "x2", "bad_witness")),
                           s->parse(get_string(w, "y1", "bad_witness")),
                           s->parse(get_string(w, "y2", "bad_witness"))};

    if (j.contains("bounds")) {
        const json& b = j.at("bounds");
        require_keys(b, {"q"}, {"p"}, "bounds");
        FieldBounds fb{std::nullopt, s->parse(get_string(b, "q", "bounds"))};
        if (b.contains("p")) fb.p = s->parse(get_string(b, "p", "bounds"));
        c.bounds = std::move(fb);
    }

    const json& cov = j.at("coverage");
    require_keys(cov, {"dom_prefix", "ran_prefix"}, {}, "coverage");
    c.dom_prefix = get_count(cov, "dom_prefix", "coverage");
    c.ran_prefix = get_count(cov, "ran_prefix", "coverage");
    return c;
}

std::string certificate_dump(const Certificate& c) {
    return certificate_to_json(c).dump(2) + "\n";
}

}  // namespace revwit
