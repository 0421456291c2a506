#include "sdt/report.hpp"

#include <sstream>
#include <stdexcept>

#include "sdt/graph6.hpp"

namespace sdt {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

ExtendedNat value_from_json(const Json& cell) {
    if (cell.is_string()) {
        if (cell.get<std::string>() != "inf")
            throw std::invalid_argument("report: non-numeric value must be \"inf\"");
        return ExtendedNat::infinity();
    }
    return ExtendedNat::finite(cell.get<std::uint32_t>());
}

}  // namespace

Json json_value(ExtendedNat v) {
    if (v.is_infinite()) return Json("inf");
    return Json(v.value());
}

Json extremal_report(const ExtremalResult& result) {
    Json doc;
    doc["schema_version"] = "1";
    doc["kind"] = "extremal";
    doc["query"] = Json{{"n", result.query.order},
                        {"l", result.query.max_degree},
                        {"d", result.query.diameter_bound},
                        {"k", result.query.k}};
    Json witnesses = Json::array();
    for (const Graph& g : result.witnesses) witnesses.push_back(graph6_encode(g));
    doc["result"] = Json{{"value", json_value(result.value)},
                         {"first_stratum", result.first_stratum},
                         {"last_stratum", result.last_stratum},
                         {"graphs_examined", result.graphs_examined},
                         {"witnesses", std::move(witnesses)},
                         {"witnesses_truncated", result.witnesses_truncated},
                         {"shard", Json{{"index", result.shard.index},
                                        {"count", result.shard.count}}}};
    return doc;
}

ExtremalResult extremal_from_report(const Json& doc) {
    if (doc.value("kind", "") != "extremal")
        throw std::invalid_argument("report: not an extremal document");
    if (doc.value("schema_version", "") != "1")
        throw std::invalid_argument("report: unsupported schema version");
    const Json& q = doc.at("query");
    const Json& r = doc.at("result");
    ExtremalResult out;
    out.query.order = q.at("n").get<int>();
    out.query.max_degree = q.at("l").get<int>();
    out.query.diameter_bound = q.at("d").get<int>();
    out.query.k = q.at("k").get<int>();
    out.value = value_from_json(r.at("value"));
    out.first_stratum = r.at("first_stratum").get<int>();
    out.last_stratum = r.at("last_stratum").get<int>();
    out.graphs_examined = r.at("graphs_examined").get<std::uint64_t>();
    for (const Json& w : r.at("witnesses"))
        out.witnesses.push_back(graph6_decode(w.get<std::string>()));
    out.witnesses_truncated = r.at("witnesses_truncated").get<bool>();
    out.shard.index = r.at("shard").at("index").get<int>();
    out.shard.count = r.at("shard").at("count").get<int>();
    return out;
}

std::string extremal_csv(const ExtremalResult& result) {
    std::ostringstream os;
    os << "n,l,d,k,value,first_stratum,last_stratum,graphs_examined,"
          "witness_count,first_witness\n";
    os << result.query.order << ',' << result.query.max_degree << ','
       << result.query.diameter_bound << ',' << result.query.k << ','
       << result.value.to_string() << ',' << result.first_stratum << ','
       << result.last_stratum << ',' << result.graphs_examined << ','
       << result.witnesses.size() << ',';
    if (!result.witnesses.empty())
        os << csv_escape(graph6_encode(result.witnesses.front()));
    os << '\n';
    return os.str();
}

Json suite_report(const SuiteReport& suite) {
    Json doc;
    doc["schema_version"] = "1";
    doc["kind"] = "verify";
    Json names = Json::array();
    for (const ClaimReport& rep : suite.claims) names.push_back(claim_name(rep.claim));
    doc["query"] = Json{{"n_max", suite.n_max}, {"claims", std::move(names)}};
    Json results = Json::array();
    for (const ClaimReport& rep : suite.claims) {
        Json cells = Json::array();
        for (const ClaimCell& cell : rep.cells) {
            Json c = Json{{"params", cell.params},
                          {"expected", cell.expected},
                          {"computed", cell.computed},
                          {"ok", cell.ok}};
            if (!cell.note.empty()) c["note"] = cell.note;
            if (!cell.witness.empty()) c["witness"] = cell.witness;
            cells.push_back(std::move(c));
        }
        results.push_back(Json{{"claim", claim_name(rep.claim)},
                               {"title", claim_title(rep.claim)},
                               {"status", to_string(rep.status)},
                               {"verified_range", rep.verified_range},
                               {"graphs_examined", rep.graphs_examined},
                               {"cells", std::move(cells)}});
    }
    doc["results"] = std::move(results);
    doc["summary"] = Json{{"claims", suite.claims.size()},
                          {"failed", suite.failed},
                          {"discrepancies", suite.discrepancies},
                          {"all_ok", suite.all_ok}};
    return doc;
}

std::string suite_csv(const SuiteReport& suite) {
    std::ostringstream os;
    os << "claim,status,params,expected,computed,ok,note,witness\n";
    for (const ClaimReport& rep : suite.claims) {
        for (const ClaimCell& cell : rep.cells) {
            os << claim_name(rep.claim) << ',' << to_string(rep.status) << ','
               << csv_escape(cell.params) << ',' << csv_escape(cell.expected) << ','
               << csv_escape(cell.computed) << ',' << (cell.ok ? "true" : "false")
               << ',' << csv_escape(cell.note) << ',' << csv_escape(cell.witness)
               << '\n';
        }
    }
    return os.str();
}

std::string render_document(Json doc, std::int64_t elapsed_ms, bool stable) {
    doc["meta"] = Json{{"elapsed_ms", stable ? std::int64_t{0} : elapsed_ms}};
    return doc.dump(2) + "\n";
}

}  // namespace sdt
