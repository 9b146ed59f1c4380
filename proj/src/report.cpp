#include "alq/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace alq {

namespace {

using nlohmann::ordered_json;

ordered_json as_json(const OutputRecord& r) {
    ordered_json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["disc"] = r.disc;
    j["g_VB"] = r.g_VB;
    j["e_p"] = r.e_p;
    j["g_quotient"] = r.g_quotient;
    j["deficient_places"] = r.deficient_places;
    j["verdict"] = r.verdict;
    j["hyperelliptic_flag"] = r.hyperelliptic_flag;
    j["assumptions"] = r.assumptions;
    return j;
}

std::string quote(const std::string& cell) {
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

OutputRecord make_record(const ParityCertificate& c, const HyperellipticWitness& sieve) {
    OutputRecord r;
    r.p = c.pair.p();
    r.q = c.pair.q();
    r.disc = c.pair.disc();
    r.g_VB = c.genus.g_VB;
    r.e_p = c.genus.e_p;
    r.g_quotient = c.genus.g_quotient;
    for (const auto& place : c.ledger.deficient_places()) r.deficient_places.push_back(place.to_string());
    r.verdict = to_string(c.verdict);
    r.hyperelliptic_flag = to_string(sieve.flag);
    for (const auto& a : c.assumptions) r.assumptions.push_back(a.citation());
    return r;
}

ParityCertificate certificate_from_record(const OutputRecord& r) {
    auto checked = check_admissible(static_cast<std::int64_t>(r.p), static_cast<std::int64_t>(r.q));
    if (const auto* rejection = std::get_if<Rejection>(&checked))
        throw std::invalid_argument("record pair is not admissible: " + rejection->message());
    const auto& pair = std::get<AdmissiblePair>(checked);
    if (r.disc != pair.disc()) throw std::invalid_argument("record disc is not p*q");
    if ((r.g_VB + 1) % 2 != 0) throw std::invalid_argument("record g_VB is even");

    const Place inf = Place::infinity();
    const Place at_p = Place::finite(r.p);
    const Place at_q = Place::finite(r.q);
    bool deficient_inf = false, deficient_p = false, deficient_q = false;
    for (const auto& text : r.deficient_places) {
        const Place v = Place::parse(text);
        if (v == inf) deficient_inf = true;
        else if (v == at_p) deficient_p = true;
        else if (v == at_q) deficient_q = true;
        else throw std::invalid_argument("record lists deficient place " + text + " outside {inf, p, q}");
    }

    DeficiencyLedger ledger;
    ledger.entries = {
        {inf, !deficient_inf, LocalSource::real_splitting},
        {at_p, !deficient_p, LocalSource::own_prime_uniformization},
        {at_q, !deficient_q, LocalSource::interchange_criterion},
        {std::nullopt, true, LocalSource::cited_away_from_disc},
    };

    Verdict verdict;
    if (r.verdict == "odd") verdict = Verdict::odd;
    else if (r.verdict == "even") verdict = Verdict::even;
    else throw std::invalid_argument("record verdict must be odd or even, got " + r.verdict);
    if (verdict != poonen_stoll_verdict(ledger))
        throw std::invalid_argument("record verdict disagrees with its deficient places");

    std::vector<Assumption> assumptions;
    for (const auto& text : r.assumptions) {
        const auto colon = text.find(": ");
        if (colon == std::string::npos)
            throw std::invalid_argument("assumption is not 'label: statement': " + text);
        assumptions.push_back({text.substr(0, colon), text.substr(colon + 2)});
    }

    const GenusData genus{r.g_VB, r.e_p, r.g_quotient, (r.g_VB + 1) / 2};
    return ParityCertificate{pair, genus, std::move(ledger), verdict, std::move(assumptions)};
}

std::string to_json(const OutputRecord& record, int indent) {
    return as_json(record).dump(indent);
}

std::string to_json(std::span<const OutputRecord> records, int indent) {
    auto array = ordered_json::array();
    for (const auto& r : records) array.push_back(as_json(r));
    return array.dump(indent);
}

OutputRecord record_from_json(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        OutputRecord r;
        r.p = j.at("p").get<std::uint64_t>();
        r.q = j.at("q").get<std::uint64_t>();
        r.disc = j.at("disc").get<std::uint64_t>();
        r.g_VB = j.at("g_VB").get<std::uint64_t>();
        r.e_p = j.at("e_p").get<std::uint64_t>();
        r.g_quotient = j.at("g_quotient").get<std::uint64_t>();
        r.deficient_places = j.at("deficient_places").get<std::vector<std::string>>();
        r.verdict = j.at("verdict").get<std::string>();
        r.hyperelliptic_flag = j.at("hyperelliptic_flag").get<std::string>();
        r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record json: ") + e.what());
    }
}

std::string csv_header() {
    return "p,q,disc,g_VB,e_p,g_quotient,deficient_places,verdict,hyperelliptic_flag,assumptions";
}

std::string to_csv_row(const OutputRecord& r) {
    return std::to_string(r.p) + ',' + std::to_string(r.q) + ',' + std::to_string(r.disc) + ',' +
           std::to_string(r.g_VB) + ',' + std::to_string(r.e_p) + ',' +
           std::to_string(r.g_quotient) + ',' + quote(join(r.deficient_places, ';')) + ',' +
           r.verdict + ',' + r.hyperelliptic_flag + ',' + quote(join(r.assumptions, ';'));
}

}  // namespace alq
