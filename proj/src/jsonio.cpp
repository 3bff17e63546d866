#include "grouporder/jsonio.hpp"

namespace grouporder {

Json to_json(const StallingsGraph& g) {
    Json j;
    j["rank"] = g.rank();
    j["base"] = g.base();
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(Json::array({e.src, "x" + std::to_string(e.label), e.dst}));
    }
    j["edges"] = std::move(edges);
    return j;
}

namespace {

Json sparse_to_json(const SparseVec& v) {
    Json out = Json::array();
    for (const auto& [key, coef] : v) {
        Json entry;
        entry["key"] = format_word(key);
        entry["coef"] = coef;
        out.push_back(std::move(entry));
    }
    return out;
}

SparseVec sparse_from_json(const Json& j, int rank) {
    SparseVec out;
    for (const auto& entry : j) {
        Word key = parse_word(entry.at("key").get<std::string>(), rank);
        auto [it, inserted] = out.try_emplace(key, entry.at("coef").get<std::int64_t>());
        if (!inserted) {
            throw DomainError("WordSyntax", "duplicate key '" + format_word(key) + "'");
        }
    }
    return out;
}

} // namespace

Json to_json(const HElement& x) {
    Json j;
    j["a"] = sparse_to_json(x.ab.a.coeffs());
    j["b"] = sparse_to_json(x.ab.b.coeffs());
    j["g"] = format_word(x.g);
    return j;
}

HElement h_from_json(const Json& j, int rank) {
    return {{AVector(rank, sparse_from_json(j.at("a"), rank)),
             BVector(rank, sparse_from_json(j.at("b"), rank))},
            parse_word(j.at("g").get<std::string>(), rank)};
}

Json to_json(const BallReport& report) {
    Json j;
    j["ok"] = report.ok;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json entry;
        entry["condition"] = to_string(v.condition);
        entry["witness"] = v.witness;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json to_json(const PreimageResult& result) {
    Json j;
    switch (result.kind) {
    case PreimageResult::Kind::Empty: j["kind"] = "empty"; break;
    case PreimageResult::Kind::Full: j["kind"] = "full"; break;
    case PreimageResult::Kind::Cylinder: {
        j["kind"] = "cylinder";
        Json words = Json::array();
        for (const Word& w : result.words) words.push_back(format_word(w));
        j["words"] = std::move(words);
        break;
    }
    }
    return j;
}

Json to_json(const OrderAutomorphism& phi) {
    Json j;
    j["rank"] = phi.rank();
    Json images = Json::array();
    for (const Word& w : phi.images()) images.push_back(format_word(w));
    j["images"] = std::move(images);
    return j;
}

} // namespace grouporder
