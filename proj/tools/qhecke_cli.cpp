#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "qhecke/combinat.hpp"
#include "qhecke/errors.hpp"
#include "qhecke/report.hpp"
#include "qhecke/specfun.hpp"
#include "qhecke/suite.hpp"

using namespace qhecke;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    RunConfig cfg;
    std::optional<Order> order;
    std::optional<int> n;
    std::optional<long long> m;
    std::optional<int> n_max;
    std::optional<int> ell;
    std::string series;
    std::string name;
    std::string save;
    std::string load;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--parallel", o.cfg.parallel, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--oracle-cap", o.cfg.oracle_cap, "largest n for brute-force oracles")
        ->check(CLI::Range(0, 30));
    sub->add_flag("!--no-timing", o.cfg.timing, "report elapsed_ms as 0");
}

void add_orders(CLI::App* sub, Options& o) {
    sub->add_option("--order", o.order, "order for every selected identity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--order-z", o.cfg.orders.two_variable, "order for two-variable identities")
        ->check(CLI::PositiveNumber);
    sub->add_option("--order-q", o.cfg.orders.one_variable, "order for one-variable identities")
        ->check(CLI::PositiveNumber);
}

void emit(const ordered_json& j, const Options& o) {
    std::cout << j.dump(2) << "\n";
    if (!o.save.empty()) {
        std::ofstream out(o.save);
        if (!out) throw std::invalid_argument("cannot write " + o.save);
        out << j.dump(2) << "\n";
    }
}

ordered_json strip_timing(ordered_json j) {
    if (j.contains("results")) {
        for (auto& r : j["results"]) r["elapsed_ms"] = 0;
    }
    if (j.contains("config")) j["config"].erase("timing");
    return j;
}

// Prints result ids whose entries differ from the saved report; returns the count.
int diff_against(const ordered_json& now, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    const ordered_json old = strip_timing(ordered_json::parse(in));
    const ordered_json cur = strip_timing(now);
    std::map<std::string, ordered_json> prev;
    for (const auto& r : old.value("results", ordered_json::array())) prev[r["id"]] = r;
    int diffs = 0;
    for (const auto& r : cur["results"]) {
        auto it = prev.find(r["id"]);
        if (it == prev.end()) {
            std::cerr << "new: " << r["id"].get<std::string>() << "\n";
            ++diffs;
        } else {
            if (it->second != r) {
                std::cerr << "changed: " << r["id"].get<std::string>() << "\n";
                ++diffs;
            }
            prev.erase(it);
        }
    }
    for (const auto& [id, r] : prev) {
        std::cerr << "missing: " << id << "\n";
        ++diffs;
    }
    for (const char* key : {"sequences", "congruences"}) {
        if (old.value(key, ordered_json()) != cur.value(key, ordered_json())) {
            std::cerr << "changed: " << key << "\n";
            ++diffs;
        }
    }
    return diffs;
}

OrderOverrides overrides(const Options& o) {
    OrderOverrides ov = o.cfg.orders;
    if (o.order) {
        ov.two_variable = ov.two_variable.value_or(*o.order);
        ov.one_variable = ov.one_variable.value_or(*o.order);
    }
    return ov;
}

int cmd_list(const Options& o) {
    const auto& cat = registry_catalog();
    if (o.cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : cat) {
            if (!id_matches(o.cfg.filter, r.id)) continue;
            ordered_json j;
            j["id"] = r.id;
            j["variables"] = r.variables == Variables::Z_AND_Q ? "z,q" : "q";
            j["default_order"] = r.default_order;
            j["kind"] = r.family ? "family" : "identity";
            if (!r.cleared_note.empty()) j["note"] = r.cleared_note;
            if (!r.variant_group.empty()) j["variant_group"] = r.variant_group;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& r : cat) {
        if (!id_matches(o.cfg.filter, r.id)) continue;
        std::cout << r.id << "\t" << (r.variables == Variables::Z_AND_Q ? "z,q" : "q") << "\t"
                  << r.default_order;
        if (!r.cleared_note.empty()) std::cout << "\t" << r.cleared_note;
        std::cout << "\n";
    }
    return kExitOk;
}

std::vector<std::string> ids_for(const std::string& filter) {
    std::vector<std::string> ids = select_ids(filter);
    if (ids.empty()) {
        // Exact names also reach fixtures that are not part of the catalog.
        lookup_record(filter);
        ids.push_back(filter);
    }
    return ids;
}

int finish(const ordered_json& report, const std::vector<VerifyReport>& results,
           const Options& o) {
    if (o.cfg.format == "json") {
        emit(report, o);
    } else {
        for (const auto& r : results) std::cout << text_line(r, o.cfg.timing) << "\n";
        if (report.contains("congruences")) {
            for (const auto& c : report["congruences"]) {
                std::cout << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << c["rule"].get<std::string>()
                          << " ell=" << c["ell"] << " n_max=" << c["n_max"]
                          << " checked=" << c["checked"] << "\n";
            }
        }
        if (!o.save.empty()) {
            std::ofstream out(o.save);
            if (!out) throw std::invalid_argument("cannot write " + o.save);
            out << report.dump(2) << "\n";
        }
    }
    int code = report_passes(report) ? kExitOk : kExitFail;
    if (!o.load.empty() && diff_against(report, o.load) != 0) code = kExitFail;
    return code;
}

int cmd_verify(const Options& o) {
    const auto ids = ids_for(o.cfg.filter);
    const auto results = verify_many(ids, overrides(o), o.cfg.parallel);
    RunConfig cfg = o.cfg;
    cfg.orders = overrides(o);
    return finish(make_report(cfg, results), results, o);
}

// Brute-force check of a rank-type coefficient; nullopt when no oracle applies.
std::optional<bool> oracle_agrees(const std::string& series, int n, const LaurentPoly& value,
                                  int cap) {
    std::optional<RankKind> kind;
    if (series == "R") kind = RankKind::N;
    if (series == "H") kind = RankKind::NBar;
    if (series == "K") kind = RankKind::N2;
    if (!kind || n > cap) return std::nullopt;
    std::vector<LaurentPoly::Term> terms;
    const Integer sign = (*kind == RankKind::N2 && n % 2 == 1) ? -1 : 1;
    for (const auto& [m, c] : rank_distribution(*kind, n, cap)) terms.emplace_back(m, sign * c);
    return LaurentPoly::from_terms(std::move(terms)) == value;
}

int cmd_coeff(const Options& o) {
    const int n = *o.n;
    const QSeries f = build_named_series(o.series, std::max(n, 1));
    const LaurentPoly value = f[n];
    const auto agrees = oracle_agrees(o.series, n, value, o.cfg.oracle_cap);
    if (o.cfg.format == "json") {
        ordered_json j;
        j["series"] = o.series;
        j["n"] = n;
        if (o.m) {
            j["m"] = *o.m;
            j["value"] = value.coeff(*o.m).str();
        } else {
            j["value"] = value.to_string();
        }
        if (agrees) j["oracle"] = *agrees ? "agrees" : "disagrees";
        emit(j, o);
    } else {
        std::cout << (o.m ? value.coeff(*o.m).str() : value.to_string()) << "\n";
        if (agrees && !*agrees) std::cerr << "brute-force oracle disagrees\n";
    }
    return agrees && !*agrees ? kExitFail : kExitOk;
}

int cmd_seq(const Options& o) {
    if (o.n && o.n_max) throw CLI::ValidationError("seq", "give --n or --n-max, not both");
    if (!o.n && !o.n_max) throw CLI::ValidationError("seq", "give --n or --n-max");
    const int top = o.n ? *o.n : *o.n_max;
    const auto values = sequence_values(o.name, top);
    if (o.cfg.format == "json") {
        if (o.n) {
            emit(ordered_json{{"name", o.name}, {"n", top}, {"value", values[top].str()}}, o);
        } else {
            emit(sequence_json(o.name, values), o);
        }
        return kExitOk;
    }
    if (o.n) {
        std::cout << values[top] << "\n";
    } else {
        for (int i = 0; i <= top; ++i) std::cout << i << " " << values[i] << "\n";
    }
    return kExitOk;
}

int cmd_congruence(const Options& o) {
    const CongruenceRule rule = congruence_rule(o.name, o.ell.value_or(0));
    const CongruenceReport rep = check_congruence(rule, o.n_max.value_or(199));
    if (o.cfg.format == "json") {
        emit(congruence_json(rep), o);
    } else {
        std::cout << (rep.ok() ? "ok   " : "FAIL ") << rep.rule << " ell=" << rep.ell
                  << " n_max=" << rep.n_max << " checked=" << rep.checked << "\n";
        for (const auto& v : rep.violations) {
            std::cout << "  n=" << v.n << " lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
        }
    }
    return rep.ok() ? kExitOk : kExitFail;
}

int cmd_report(const Options& o) {
    const auto ids = select_ids(o.cfg.filter);
    const auto results = verify_many(ids, overrides(o), o.cfg.parallel);
    const int table = o.cfg.table_order.value_or(1000);
    ordered_json seqs = ordered_json::array();
    for (const char* s : {"spt", "a"}) seqs.push_back(sequence_json(s, sequence_values(s, table)));
    ordered_json congs = ordered_json::array();
    congs.push_back(congruence_json(check_congruence(congruence_rule("congs35"), 199)));
    for (int ell : {5, 7, 17}) {
        congs.push_back(congruence_json(check_congruence(congruence_rule("heckecong", ell), 2000)));
    }
    for (int ell : {3, 5, 11}) {
        congs.push_back(
            congruence_json(check_congruence(congruence_rule("M2heckecong", ell), 2000)));
    }
    RunConfig cfg = o.cfg;
    cfg.orders = overrides(o);
    cfg.table_order = table;
    return finish(make_report(cfg, results, seqs, congs), results, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of two-variable q-series identities"};
    app.require_subcommand(1);
    Options o;

    auto* list = app.add_subcommand("list", "list the identity catalog");
    list->add_option("--id", o.cfg.filter, "glob on ids");
    add_common(list, o);

    auto* verify = app.add_subcommand("verify", "verify identities");
    verify->add_option("--id", o.cfg.filter, "glob on ids");
    add_orders(verify, o);
    add_common(verify, o);
    verify->add_option("--save", o.save, "write the JSON report here");
    verify->add_option("--load", o.load, "compare against a saved JSON report");

    auto* coeff = app.add_subcommand("coeff", "coefficient of q^n in a named series");
    coeff->add_option("--series", o.series, "series name")->required();
    coeff->add_option("--n", o.n, "q-power")->required()->check(CLI::NonNegativeNumber);
    coeff->add_option("--m", o.m, "z-power; omit for the whole Laurent polynomial");
    add_common(coeff, o);

    auto* seq = app.add_subcommand("seq", "integer sequence values");
    seq->add_option("name", o.name, "spt, sptBar, m2spt, a, alpha or beta")
        ->required()
        ->check(CLI::IsMember(sequence_names()));
    seq->add_option("--n", o.n, "single index")->check(CLI::NonNegativeNumber);
    seq->add_option("--n-max", o.n_max, "all indices up to this")->check(CLI::NonNegativeNumber);
    add_common(seq, o);

    auto* cong = app.add_subcommand("congruence", "check a congruence rule");
    cong->add_option("rule", o.name, "congs35, heckecong or M2heckecong")
        ->required()
        ->check(CLI::IsMember({"congs35", "heckecong", "M2heckecong"}));
    cong->add_option("--ell", o.ell, "prime modulus");
    cong->add_option("--n-max", o.n_max, "index bound")->check(CLI::NonNegativeNumber);
    add_common(cong, o);

    auto* report = app.add_subcommand("report", "full suite report");
    report->add_option("--id", o.cfg.filter, "glob on ids");
    add_orders(report, o);
    report->add_option("--order-table", o.cfg.table_order, "sequence table length")
        ->check(CLI::PositiveNumber);
    add_common(report, o);
    report->add_option("--save", o.save, "write the JSON report here");
    report->add_option("--load", o.load, "compare against a saved JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*list) return cmd_list(o);
        if (*verify) return cmd_verify(o);
        if (*coeff) return cmd_coeff(o);
        if (*seq) return cmd_seq(o);
        if (*cong) return cmd_congruence(o);
        if (*report) {
            if (o.cfg.format == "text" && report->count("--format") == 0) o.cfg.format = "json";
            return cmd_report(o);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalAssertion& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
