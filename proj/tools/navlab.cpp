#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "navlab/correspondence.hpp"
#include "navlab/io.hpp"
#include "navlab/oracles.hpp"
#include "navlab/selftest.hpp"

using nlohmann::json;

namespace {

class Stopwatch {
public:
    long long elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json sigma_json(const navlab::GaloisElement& sigma) {
    return json{{"p", sigma.p}, {"e", sigma.e}, {"k", sigma.k}};
}

json entry_json(const navlab::EntryVerdict& v) {
    using navlab::partition_string;
    const auto& e = v.entry;
    json j;
    if (e.split) {
        j["lambda"] = partition_string(e.lambda);
        j["Lambda"] = navlab::local_label_string(e.Lambda);
    } else {
        j["lambda"] = partition_string(e.lambda) + "|" + partition_string(e.lambda_conj);
        j["Lambda"] = navlab::local_label_string(e.Lambda) + "|" +
                      navlab::local_label_string(e.Lambda_dual);
    }
    j["type"] = e.split ? "split" : "nonsplit";
    j["D_global"] = e.D_global ? json(*e.D_global) : json(nullptr);
    j["D_local"] = e.D_local ? json(*e.D_local) : json(nullptr);
    j["status"] = v.status == navlab::PairAction::Fixed ? "fixed" : "swapped";
    j["pass"] = v.pass;
    return j;
}

int run_decompose(const std::string& partition_text, int p, const std::string& format) {
    const Stopwatch watch;
    const navlab::Partition lam = navlab::parse_partition(partition_text);
    if (!navlab::is_odd_prime(p)) throw std::domain_error("p must be an odd prime");
    const auto cq = navlab::core_quotient(lam, p);
    const auto diag = navlab::diagonal_hooks(lam);
    const auto deg = navlab::degree(lam);
    const int valuation = navlab::p_valuation_of_degree(lam, p);

    if (format == "text") {
        std::cout << "partition: " << partition_text << "\n";
        std::cout << "p: " << p << "\n";
        std::cout << "core: " << navlab::partition_string(cq.core) << "\n";
        std::cout << "quotient: ";
        for (std::size_t g = 0; g < cq.quotient.size(); ++g) {
            if (g) std::cout << " | ";
            std::cout << (cq.quotient[g].empty() ? "∅"
                                                 : navlab::partition_string(cq.quotient[g]));
        }
        std::cout << "\n";
        std::cout << "weight: " << cq.weight() << "\n";
        std::cout << "diagonal hooks: " << navlab::cycle_type_string(diag) << "\n";
        std::cout << "degree: " << deg << "\n";
        std::cout << "p-valuation of degree: " << valuation << "\n";
        return 0;
    }

    json j;
    j["schema"] = "1";
    j["command"] = "decompose";
    j["input"] = {{"partition", navlab::partition_string(lam)}, {"p", p}};
    j["core"] = navlab::partition_string(cq.core);
    json quot = json::array();
    for (const auto& q : cq.quotient) quot.push_back(navlab::partition_string(q));
    j["quotient"] = quot;
    j["weight"] = cq.weight();
    j["diagonal_hooks"] = diag;
    j["degree"] = deg.str();
    j["p_valuation"] = valuation;
    j["timing_ms"] = watch.elapsed_ms();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_verify(int p, int w, int e, int k, bool all_sigma) {
    const Stopwatch watch;
    const auto mckay = navlab::mckay_count(p, w);  // also validates p and w

    std::vector<navlab::GaloisElement> sigmas;
    if (all_sigma) {
        for (int ee = 0; ee <= 2; ++ee)
            for (int kk = 1; kk < p; ++kk) sigmas.emplace_back(p, ee, kk);
    } else {
        sigmas.emplace_back(p, e, k);
    }

    json j;
    j["schema"] = "1";
    j["command"] = "verify";
    j["p"] = p;
    j["w"] = w;
    j["mckay"] = {{"global", mckay.global_count},
                  {"local", mckay.local_count},
                  {"equal", mckay.equal}};

    bool pass = mckay.equal;
    json runs = json::array();
    for (const auto& sigma : sigmas) {
        const auto report = navlab::verify_commutation(p, w, sigma);
        const auto navarro = navlab::navarro_count_psingular(p, w, sigma);
        json run;
        run["sigma"] = sigma_json(sigma);
        json entries = json::array();
        for (const auto& v : report.entries) entries.push_back(entry_json(v));
        run["entries"] = entries;
        run["navarro"] = {{"global_fixed", navarro.global_fixed},
                          {"local_fixed", navarro.local_fixed},
                          {"equal", navarro.equal}};
        run["pass"] = report.pass && navarro.equal;
        pass = pass && report.pass && navarro.equal;
        runs.push_back(run);
    }
    if (all_sigma) {
        j["runs"] = runs;
    } else {
        j["sigma"] = runs[0]["sigma"];
        j["entries"] = runs[0]["entries"];
        j["navarro"] = runs[0]["navarro"];
    }
    j["pass"] = pass;
    j["timing_ms"] = watch.elapsed_ms();
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

std::string class_header(const navlab::oracles::AltClassInfo& cls) {
    std::string out = navlab::partition_string(cls.type);
    if (cls.split) out += cls.sign > 0 ? "+" : "-";
    return out;
}

int run_table(int n, const std::string& format) {
    const Stopwatch watch;
    const auto t = navlab::oracles::alt_table(n);
    const bool orthogonal = navlab::oracles::orthogonality_holds(t);

    if (format == "csv") {
        auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
        std::cout << quoted("label");
        for (const auto& cls : t.classes) std::cout << "," << quoted(class_header(cls));
        std::cout << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            std::cout << quoted(navlab::alt_char_string(t.rows[r]));
            for (const auto& v : t.values[r]) std::cout << "," << quoted(v.str());
            std::cout << "\n";
        }
        std::cout << quoted("orthogonality") << "," << quoted(orthogonal ? "pass" : "fail")
                  << "\n";
        return orthogonal ? 0 : 1;
    }

    json j;
    j["schema"] = "1";
    j["command"] = "table";
    j["n"] = n;
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(navlab::alt_char_string(row));
    j["rows"] = rows;
    json classes = json::array();
    for (const auto& cls : t.classes) {
        json c;
        c["type"] = navlab::partition_string(cls.type);
        c["split"] = cls.split;
        c["sign"] = cls.split ? (cls.sign > 0 ? "+" : "-") : "";
        c["size"] = cls.size;
        c["centralizer"] = cls.centralizer;
        classes.push_back(c);
    }
    j["classes"] = classes;
    json values = json::array();
    for (const auto& row : t.values) {
        json vals = json::array();
        for (const auto& v : row) vals.push_back(v.str());
        values.push_back(vals);
    }
    j["values"] = values;
    j["orthogonality"] = orthogonal;
    j["timing_ms"] = watch.elapsed_ms();
    std::cout << j.dump(2) << "\n";
    return orthogonal ? 0 : 1;
}

int run_selftest(bool quick, bool corrupt_epsilon) {
    navlab::selftest::Options opt;
    opt.quick = quick;
    opt.corrupt_epsilon = corrupt_epsilon;
    const auto results = navlab::selftest::run_all(opt);
    int passed = 0;
    const navlab::selftest::CriterionResult* first_fail = nullptr;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " C" << r.id << " " << r.name << ": "
                  << r.detail << "\n";
        if (r.pass)
            ++passed;
        else if (!first_fail)
            first_fail = &r;
    }
    std::cout << "selftest: " << passed << "/" << results.size() << " criteria passed\n";
    if (first_fail)
        std::cout << "first failure: C" << first_fail->id << " (" << first_fail->detail << ")\n";
    return first_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks of the local-global character correspondence for alternating "
                 "groups with abelian defect"};
    app.require_subcommand(1);

    std::string partition_text;
    int decompose_p = 3;
    std::string decompose_format = "json";
    auto* decompose = app.add_subcommand(
        "decompose", "p-core, p-quotient, hooks and degree data of a partition");
    decompose->add_option("--partition", partition_text,
                          "comma-separated parts, e.g. \"4,2,1\"; empty for the zero partition");
    decompose->add_option("--p", decompose_p, "odd prime")->required();
    decompose->add_option("--format", decompose_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    int verify_p = 3, verify_w = 1, verify_e = 0, verify_k = 1;
    bool all_sigma = false;
    auto* verify = app.add_subcommand(
        "verify", "commutation, McKay and Navarro count checks for the principal block");
    verify->add_option("--p", verify_p, "odd prime")->required();
    verify->add_option("--w", verify_w, "weight, must be below p")->required();
    auto* opt_e = verify->add_option("--e", verify_e, "sigma exponent on p'-roots");
    auto* opt_k = verify->add_option("--k", verify_k, "sigma exponent on p-power roots");
    verify->add_flag("--all-sigma", all_sigma, "sweep e in {0,1,2} and every unit k mod p")
        ->excludes(opt_e)
        ->excludes(opt_k);

    int table_n = 5;
    std::string table_format = "json";
    auto* table =
        app.add_subcommand("table", "exact alternating character table for n <= 7");
    table->add_option("--n", table_n, "group degree, at most 7")->required();
    table->add_option("--format", table_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    bool quick = false, corrupt_epsilon = false;
    auto* selftest = app.add_subcommand("selftest", "run the full acceptance grid");
    selftest->add_flag("--quick", quick, "reduced grid, a few seconds");
    selftest->add_flag("--corrupt-epsilon", corrupt_epsilon,
                       "negative control: flip the local epsilon convention");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*decompose) return run_decompose(partition_text, decompose_p, decompose_format);
        if (*verify) return run_verify(verify_p, verify_w, verify_e, verify_k, all_sigma);
        if (*table) return run_table(table_n, table_format);
        if (*selftest) return run_selftest(quick, corrupt_epsilon);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
