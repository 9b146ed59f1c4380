#include "alq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "alq/error.hpp"
#include "alq/graph_io.hpp"
#include "alq/ntheory.hpp"
#include "alq/parity.hpp"
#include "alq/report.hpp"

namespace alq {

namespace {

void print_certificate_text(std::ostream& out, const ParityCertificate& c,
                            const HyperellipticWitness& sieve) {
    out << "pair: p=" << c.pair.p() << " q=" << c.pair.q() << " disc=" << c.pair.disc() << '\n';
    out << "genus: g(V_B)=" << c.genus.g_VB << " e(p)=" << c.genus.e_p
        << " (g(V_B)+1)/2=" << c.genus.mass_half << " g(V^(p))=" << c.genus.g_quotient << '\n';
    out << "ledger:\n";
    for (const auto& e : c.ledger.entries) {
        const std::string place = e.place ? e.place->to_string() : "rest";
        out << "  " << place << ": " << (e.pic1_nonempty ? "nonempty" : "EMPTY") << " ["
            << to_string(e.source) << "]\n";
    }
    out << "deficient places:";
    for (const auto& v : c.ledger.deficient_places()) out << ' ' << v.to_string();
    out << '\n';
    out << "verdict: " << to_string(c.verdict) << '\n';
    out << "hyperelliptic: " << to_string(sieve.flag) << " ((p-1)(q-1)=" << sieve.product
        << ", H(2pq)=" << sieve.class_number_2pq << ")\n";
    out << "assumptions:\n";
    for (const auto& a : c.assumptions) out << "  - " << a.citation() << '\n';
}

int cmd_certify(std::int64_t p, std::int64_t q, const std::string& format, std::ostream& out,
                std::ostream& err) {
    auto result = certify(p, q);
    if (const auto* rejection = std::get_if<Rejection>(&result)) {
        err << "rejected: " << rejection->message() << '\n';
        return kExitRejected;
    }
    const auto& certificate = std::get<ParityCertificate>(result);
    const auto sieve = hyperelliptic_sieve(certificate.pair);
    if (format == "json") {
        out << to_json(make_record(certificate, sieve)) << '\n';
    } else {
        print_certificate_text(out, certificate, sieve);
    }
    return kExitOk;
}

int cmd_enumerate(std::uint64_t max, const std::string& format, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    constexpr std::uint64_t kLimit = 1u << 15;
    if (max > kLimit) {
        err << "--max must be at most " << kLimit << '\n';
        return kExitUsage;
    }
    // 2^15 itself is not prime, so capping keeps the result unchanged
    const auto pairs = enumerate_admissible(std::min(max, kLimit - 1));

    std::vector<OutputRecord> records;
    records.reserve(pairs.size());
    for (const auto& pair : pairs) records.push_back(make_record(certify(pair), hyperelliptic_sieve(pair)));

    std::ostringstream buffer;
    if (format == "json") {
        buffer << to_json(records) << '\n';
    } else {
        buffer << csv_header() << '\n';
        for (const auto& r : records) buffer << to_csv_row(r) << '\n';
    }

    if (out_path.empty()) {
        out << buffer.str();
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
        err << "cannot write " << out_path << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_hilbert(std::int64_t a, std::int64_t b, const std::string& place, std::ostream& out,
                std::ostream& err) {
    if (a == 0 || b == 0) {
        err << "hilbert symbol needs nonzero a and b\n";
        return kExitUsage;
    }
    try {
        const auto v = Place::parse(place);
        out << (hilbert_symbol(a, b, v) == Sign::plus ? "+1" : "-1") << '\n';
        return kExitOk;
    } catch (const ArithmeticError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

struct GraphCheckOptions {
    std::string path;
    std::string frobenius = "wp";
    std::string quotient;
    std::uint64_t e = 1;
    std::uint64_t f = 1;
    bool shimura = false;
};

int cmd_graph_check(const GraphCheckOptions& opt, std::ostream& out, std::ostream& err) {
    LengthedQuotientGraph graph;
    try {
        graph = parse_graph_file(opt.path);
    } catch (const GraphError& e) {
        err << opt.path << ": " << e.what() << '\n';
        return kExitUsage;
    }

    auto report = [&](const std::vector<Violation>& violations) {
        if (violations.empty()) out << "violations: none\n";
        for (const auto& v : violations) {
            out << (v.severity == Violation::Severity::error ? "error: " : "warning: ")
                << v.message << '\n';
        }
    };

    const auto violations = validate(graph, {.shimura_dual_graph = opt.shimura});
    report(violations);
    if (has_errors(violations)) {
        out << "local point: not evaluated (graph has errors)\n";
        return kExitRejected;
    }

    if (!opt.quotient.empty()) {
        try {
            graph = quotient_by_involution(graph, *parse_involution_name(opt.quotient));
        } catch (const GraphError& e) {
            err << "quotient by " << opt.quotient << ": " << e.what() << '\n';
            return kExitRejected;
        }
        out << "quotient by " << opt.quotient << ": " << graph.vertices.size() << " vertices, "
            << graph.edge_ids.size() << " edges\n";
    }

    const auto changed = base_change(graph, opt.e, opt.f);
    Involution frobenius = changed.frobenius;
    if (opt.frobenius == "identity") {
        frobenius = Involution::identity(graph.vertices.size(), graph.oriented_edge_count());
    } else if (opt.frobenius != "wp") {
        const auto& w = changed.graph.involution(*parse_involution_name(opt.frobenius));
        frobenius = (opt.f % 2 == 1) ? w
                                     : Involution::identity(graph.vertices.size(),
                                                            graph.oriented_edge_count());
    }

    if (const auto witness = has_local_point(changed.graph, frobenius)) {
        out << "local point: yes, witness " << changed.graph.edge_name(*witness) << '\n';
    } else {
        out << "local point: no\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parity certificates for Atkin-Lehner quotients of Shimura curves", "alq"};
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0;
    std::string certify_format = "text";
    auto* certify_cmd = app.add_subcommand("certify", "certify that the jacobian of V^(p) is odd");
    certify_cmd->add_option("p", p, "prime p = 5 mod 24")->required();
    certify_cmd->add_option("q", q, "prime q = 5 mod 12")->required();
    certify_cmd->add_option("--format", certify_format)->check(CLI::IsMember({"json", "text"}));

    std::uint64_t max = 100;
    std::string enumerate_format = "csv";
    std::string out_path;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "certify every admissible pair up to a bound");
    enumerate_cmd->add_option("--max", max, "bound on p and q (at most 2^15)");
    enumerate_cmd->add_option("--format", enumerate_format)->check(CLI::IsMember({"csv", "json"}));
    enumerate_cmd->add_option("--out", out_path, "write the table to this file");

    std::int64_t a = 0, b = 0;
    std::string place;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v");
    hilbert_cmd->add_option("a", a)->required();
    hilbert_cmd->add_option("b", b)->required();
    hilbert_cmd->add_option("v", place, "a prime or inf")->required();

    GraphCheckOptions graph_opt;
    auto* graph_cmd = app.add_subcommand("graph-check", "validate a dual graph and test for local points");
    graph_cmd->add_option("path", graph_opt.path)->required();
    graph_cmd->add_option("--frobenius", graph_opt.frobenius)
        ->check(CLI::IsMember({"wp", "wq", "wpq", "identity"}));
    graph_cmd->add_option("--quotient", graph_opt.quotient, "quotient by this involution first")
        ->check(CLI::IsMember({"wp", "wq", "wpq"}));
    graph_cmd->add_option("--e", graph_opt.e, "ramification index of the base change")
        ->check(CLI::PositiveNumber);
    graph_cmd->add_option("--f", graph_opt.f, "residue degree of the base change")
        ->check(CLI::PositiveNumber);
    graph_cmd->add_flag("--shimura", graph_opt.shimura, "warn about edges excluded for Shimura dual graphs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    if (certify_cmd->parsed()) return cmd_certify(p, q, certify_format, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(max, enumerate_format, out_path, out, err);
    if (hilbert_cmd->parsed()) return cmd_hilbert(a, b, place, out, err);
    return cmd_graph_check(graph_opt, out, err);
}

}  // namespace alq
