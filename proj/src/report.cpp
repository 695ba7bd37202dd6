#include "wqo/report.hpp"

#include <sstream>

#include <json.hpp>

namespace wqo {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json words_array(const std::vector<Word>& words) {
    ordered_json a = ordered_json::array();
    for (const Word& w : words) a.push_back(w);
    return a;
}

ordered_json certificate_json(const Certificate& certificate) {
    ordered_json c;
    if (const auto* chain = std::get_if<ChainDecomposition>(&certificate)) {
        c["type"] = "chain-decomposition";
        c["chain_count"] = chain->chain_count;
        c["anchors"] = words_array(chain->anchors);
        c["s_words"] = words_array(chain->s_words);
        c["s_max"] = words_array(chain->s_max);
    } else if (const auto* r = std::get_if<RInclusion>(&certificate)) {
        c["type"] = "r-inclusion";
        c["bounds"] = {{"n", r->bounds.n},
                       {"m", r->bounds.m},
                       {"n0", r->bounds.n0},
                       {"b1", r->bounds.b1},
                       {"b2", r->bounds.b2}};
        c["effective_b1"] = r->effective_b1;
        c["component_count"] = r->component_count;
        c["periods"] = words_array(r->periods);
    } else if (const auto* sample = std::get_if<AntichainSample>(&certificate)) {
        c["type"] = "antichain-sample";
        c["words"] = words_array(sample->words);
    } else if (const auto* unbounded = std::get_if<Unboundedness>(&certificate)) {
        c["type"] = "unboundedness";
        c["state"] = unbounded->state;
        c["u"] = unbounded->u;
        c["v"] = unbounded->v;
        c["antichain"] = words_array(unbounded->antichain);
    } else if (const auto* escape = std::get_if<EscapeWord>(&certificate)) {
        c["type"] = "escape-word";
        c["word"] = escape->word;
        c["antichain"] = words_array(escape->antichain);
    }
    return c;
}

std::string certificate_text(const Certificate& certificate) {
    std::ostringstream out;
    if (const auto* chain = std::get_if<ChainDecomposition>(&certificate)) {
        out << "chain decomposition: " << chain->chain_count << " chain(s)";
        if (!chain->anchors.empty()) {
            out << ", anchors:";
            for (const Word& w : chain->anchors) out << " '" << w << "'";
        }
        out << ", |S| = " << chain->s_words.size();
    } else if (const auto* r = std::get_if<RInclusion>(&certificate)) {
        out << "inclusion in R(n=" << r->bounds.n << ", m=" << r->bounds.m
            << ", n0=" << r->bounds.n0 << "; b1=" << r->bounds.b1 << ", b2=" << r->bounds.b2
            << "), " << r->periods.size() << " period(s), " << r->component_count
            << " component(s)";
    } else if (const auto* sample = std::get_if<AntichainSample>(&certificate)) {
        out << "antichain:";
        for (const Word& w : sample->words) out << " '" << w << "'";
    } else if (const auto* unbounded = std::get_if<Unboundedness>(&certificate)) {
        out << "unbounded: state " << unbounded->state << " carries cycles '" << unbounded->u
            << "' and '" << unbounded->v << "' with '" << unbounded->u << unbounded->v
            << "' != '" << unbounded->v << unbounded->u << "'";
        if (!unbounded->antichain.empty()) {
            out << "; antichain:";
            for (const Word& w : unbounded->antichain) out << " '" << w << "'";
        }
    } else if (const auto* escape = std::get_if<EscapeWord>(&certificate)) {
        out << "escape word '" << escape->word << "' lies in L but not in R";
        if (!escape->antichain.empty()) {
            out << "; antichain:";
            for (const Word& w : escape->antichain) out << " '" << w << "'";
        }
    }
    return out.str();
}

}  // namespace

std::string emit_report(const DecisionReport& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["relation"] = rel_name(r.relation);
        j["verdict"] = r.wqo ? "wqo" : "not-wqo";
        j["certificate"] = certificate_json(r.certificate);
        if (r.ordinal_bounds) {
            const auto& b = *r.ordinal_bounds;
            j["ordinal_bounds"] = {{"height", to_string(b.height)},
                                   {"height_strict", b.height_strict},
                                   {"width", to_string(b.width)},
                                   {"width_strict", b.width_strict},
                                   {"mot", to_string(b.mot)},
                                   {"mot_strict", b.mot_strict}};
        }
        return j.dump();
    }
    std::ostringstream out;
    out << rel_name(r.relation) << ": " << (r.wqo ? "wqo" : "not-wqo") << "\n";
    out << "certificate: " << certificate_text(r.certificate) << "\n";
    if (r.ordinal_bounds) {
        const auto& b = *r.ordinal_bounds;
        out << "ordinal bounds: height " << (b.height_strict ? "< " : "<= ")
            << to_string(b.height) << ", width " << (b.width_strict ? "< " : "<= ")
            << to_string(b.width) << ", mot " << (b.mot_strict ? "< " : "<= ")
            << to_string(b.mot) << "\n";
    }
    return out.str();
}

}  // namespace wqo
