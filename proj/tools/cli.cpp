#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "goldbach/candidates.hpp"
#include "goldbach/primality.hpp"
#include "goldbach/search.hpp"
#include "goldbach/wheel.hpp"

namespace goldbach::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Invocation {
    std::string command;
    std::vector<uint64_t> numbers;   // positional integers, parsed
    std::vector<std::string> modes;  // --first / --all / --candidates
    Format format = Format::Text;
    std::string out_path;            // empty = stdout
};

int usage(std::ostream& err) {
    err << "usage: goldbach-wheel <command> [args] [--format text|json|csv] [--out PATH]\n"
           "  classify N              remainder class, column, and row of even N\n"
           "  pairs N [--first|--all|--candidates]\n"
           "                          partitions of N (default --all); --candidates\n"
           "                          lists every split with composites marked '*'\n"
           "  sweep FROM TO           one record per even N in [FROM, TO]\n"
           "  compare N               candidate counts versus both baselines\n"
           "  verify FROM TO          check completeness of the families against\n"
           "                          brute force for every even N in [FROM, TO]\n"
           "environment: GOLDBACH_SIEVE_CAP caps sieve cells (default 1000000000)\n";
    return kUsageError;
}

bool parse_u64(const std::string& text, uint64_t& value) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [end, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && end == last;
}

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::A: return "A";
        case CaseTag::C: return "C";
        case CaseTag::E: return "E";
        default: return "small";
    }
}

const char* form_name(PairForm form) {
    switch (form) {
        case PairForm::ThreePlusD: return "3+D";
        case PairForm::ThreePlusF: return "3+F";
        case PairForm::FF: return "F+F";
        case PairForm::DD: return "D+D";
        case PairForm::DF: return "D+F";
        default: return "small";
    }
}

// Ratios are rounded to three decimals once so every format renders the
// same value.
double ratio3(uint64_t numer, uint64_t denom) {
    return std::round(1000.0 * static_cast<double>(numer) /
                      static_cast<double>(denom)) / 1000.0;
}

std::ostream& fixed3(std::ostream& out, double value) {
    const auto flags = out.flags();
    out << std::fixed << std::setprecision(3) << value;
    out.flags(flags);
    return out;
}

bool sieve_cap(uint64_t& cap, std::ostream& err) {
    cap = kDefaultSieveCellCap;
    const char* raw = std::getenv("GOLDBACH_SIEVE_CAP");
    if (raw == nullptr) return true;
    if (!parse_u64(raw, cap) || cap == 0) {
        err << "GOLDBACH_SIEVE_CAP must be a positive integer, got \"" << raw
            << "\"\n";
        return false;
    }
    return true;
}

ordered_json pair_json(const PairReport& report) {
    return ordered_json{{"lo", report.pair.lo},
                        {"hi", report.pair.hi},
                        {"lo_prime", report.lo_prime},
                        {"hi_prime", report.hi_prime},
                        {"form", form_name(report.pair.form)},
                        {"n", report.pair.n}};
}

void pair_csv_rows(std::ostream& out, const std::vector<PairReport>& reports) {
    out << "lo,hi,lo_prime,hi_prime,form,n\n";
    for (const PairReport& r : reports) {
        out << r.pair.lo << ',' << r.pair.hi << ','
            << (r.lo_prime ? "true" : "false") << ','
            << (r.hi_prime ? "true" : "false") << ','
            << form_name(r.pair.form) << ',' << r.pair.n << '\n';
    }
}

int cmd_classify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.numbers.size() != 1) return usage(err);
    const EvenClass cls = classify_even(inv.numbers[0]);
    const uint64_t remainder = cls.n_value % 6;
    switch (inv.format) {
        case Format::Text:
            if (cls.tag == CaseTag::Small) {
                out << "small case\n";
            } else {
                out << "remainder=" << remainder << " column=" << case_name(cls.tag)
                    << " x=" << cls.x << '\n';
            }
            break;
        case Format::Json: {
            ordered_json j{{"N", cls.n_value},
                           {"remainder", remainder},
                           {"case", case_name(cls.tag)}};
            if (cls.tag != CaseTag::Small) j["x"] = cls.x;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "N,remainder,case,x\n"
                << cls.n_value << ',' << remainder << ',' << case_name(cls.tag)
                << ',';
            if (cls.tag != CaseTag::Small) out << cls.x;
            out << '\n';
            break;
    }
    return kOk;
}

int cmd_pairs(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.numbers.size() != 1 || inv.modes.size() > 1) return usage(err);
    const uint64_t n = inv.numbers[0];
    const std::string mode = inv.modes.empty() ? "--all" : inv.modes[0];

    std::vector<PairReport> reports;
    if (mode == "--first") {
        if (auto first = find_first_pair(n)) reports.push_back(*first);
    } else if (mode == "--all") {
        reports = find_all_pairs(n);
    } else {
        reports = report_all_candidates(n);
    }

    uint64_t partitions = 0;
    for (const PairReport& r : reports) partitions += r.is_partition() ? 1 : 0;

    switch (inv.format) {
        case Format::Text:
            if (mode == "--candidates") {
                for (const PairReport& r : reports) {
                    out << r.pair.lo << (r.lo_prime ? "" : "*") << " + "
                        << r.pair.hi << (r.hi_prime ? "" : "*") << '\n';
                }
            } else if (!reports.empty()) {
                out << n;
                for (const PairReport& r : reports) {
                    out << " = " << r.pair.lo << " + " << r.pair.hi;
                }
                out << '\n';
            }
            break;
        case Format::Json: {
            ordered_json j{{"N", n}};
            j["pairs"] = ordered_json::array();
            for (const PairReport& r : reports) j["pairs"].push_back(pair_json(r));
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            pair_csv_rows(out, reports);
            break;
    }

    if (partitions == 0) {
        err << "no partition found for N=" << n << '\n';
        return kExhausted;
    }
    return kOk;
}

int cmd_compare(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.numbers.size() != 1 || !inv.modes.empty()) return usage(err);
    const uint64_t n = inv.numbers[0];
    const EvenClass cls = classify_even(n);
    if (cls.tag == CaseTag::Small) {
        err << "compare needs N >= 14\n";
        return kUsageError;
    }
    uint64_t cap = 0;
    if (!sieve_cap(cap, err)) return kUsageError;
    const PrimeSieve sieve = build_sieve(n, cap);
    const SearchMetrics m = compare_baselines(n, sieve);
    const double ratio_odd = ratio3(m.wheel_candidates, m.baseline_odd_pairs);
    const double ratio_prime = ratio3(m.wheel_candidates, m.baseline_prime_pairs);

    switch (inv.format) {
        case Format::Text:
            out << "N=" << m.n_value << " wheel_candidates=" << m.wheel_candidates
                << " wheel_primality_tests=" << m.wheel_primality_tests;
            if (m.first_hit_index) out << " first_hit_index=" << *m.first_hit_index;
            out << " baseline_odd_pairs=" << m.baseline_odd_pairs
                << " baseline_prime_pairs=" << m.baseline_prime_pairs
                << " ratio_odd=";
            fixed3(out, ratio_odd) << " ratio_prime=";
            fixed3(out, ratio_prime) << '\n';
            break;
        case Format::Json: {
            ordered_json j{{"N", m.n_value},
                           {"wheel_candidates", m.wheel_candidates},
                           {"wheel_primality_tests", m.wheel_primality_tests}};
            if (m.first_hit_index) j["first_hit_index"] = *m.first_hit_index;
            j["baseline_odd_pairs"] = m.baseline_odd_pairs;
            j["baseline_prime_pairs"] = m.baseline_prime_pairs;
            j["ratio_odd"] = ratio_odd;
            j["ratio_prime"] = ratio_prime;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "N,wheel_candidates,wheel_primality_tests,first_hit_index,"
                   "baseline_odd_pairs,baseline_prime_pairs,ratio_odd,ratio_prime\n"
                << m.n_value << ',' << m.wheel_candidates << ','
                << m.wheel_primality_tests << ',';
            if (m.first_hit_index) out << *m.first_hit_index;
            out << ',' << m.baseline_odd_pairs << ',' << m.baseline_prime_pairs
                << ',';
            fixed3(out, ratio_odd) << ',';
            fixed3(out, ratio_prime) << '\n';
            break;
    }
    return kOk;
}

int cmd_sweep(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.numbers.size() != 2 || !inv.modes.empty()) return usage(err);
    const uint64_t from = inv.numbers[0];
    const uint64_t to = inv.numbers[1];
    uint64_t cap = 0;
    if (!sieve_cap(cap, err)) return kUsageError;
    const PrimeSieve sieve = build_sieve(to < 4 ? 4 : to, cap);
    const std::vector<SweepRecord> records = sweep(from, to, sieve);

    switch (inv.format) {
        case Format::Text:
            for (const SweepRecord& rec : records) {
                out << "N=" << rec.n_value << " case=" << case_name(rec.case_tag)
                    << " partition_count=" << rec.partition_count;
                if (rec.first_pair) {
                    out << " first_lo=" << rec.first_pair->lo
                        << " first_hi=" << rec.first_pair->hi;
                }
                out << " wheel_candidates=" << rec.metrics.wheel_candidates
                    << " baseline_odd_pairs=" << rec.metrics.baseline_odd_pairs
                    << " baseline_prime_pairs=" << rec.metrics.baseline_prime_pairs;
                if (rec.metrics.first_hit_index) {
                    out << " first_hit_index=" << *rec.metrics.first_hit_index;
                }
                out << '\n';
            }
            break;
        case Format::Json: {
            ordered_json j{{"from", from}, {"to", to}};
            j["records"] = ordered_json::array();
            for (const SweepRecord& rec : records) {
                ordered_json r{{"N", rec.n_value},
                               {"case", case_name(rec.case_tag)},
                               {"partition_count", rec.partition_count}};
                if (rec.first_pair) {
                    r["first_lo"] = rec.first_pair->lo;
                    r["first_hi"] = rec.first_pair->hi;
                }
                r["wheel_candidates"] = rec.metrics.wheel_candidates;
                r["baseline_odd_pairs"] = rec.metrics.baseline_odd_pairs;
                r["baseline_prime_pairs"] = rec.metrics.baseline_prime_pairs;
                if (rec.metrics.first_hit_index) {
                    r["first_hit_index"] = *rec.metrics.first_hit_index;
                }
                if (rec.counterexample) r["counterexample"] = true;
                j["records"].push_back(std::move(r));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "N,case,partition_count,first_lo,first_hi,wheel_candidates,"
                   "baseline_odd_pairs,baseline_prime_pairs,first_hit_index\n";
            for (const SweepRecord& rec : records) {
                out << rec.n_value << ',' << case_name(rec.case_tag) << ','
                    << rec.partition_count << ',';
                if (rec.first_pair) out << rec.first_pair->lo;
                out << ',';
                if (rec.first_pair) out << rec.first_pair->hi;
                out << ',' << rec.metrics.wheel_candidates << ','
                    << rec.metrics.baseline_odd_pairs << ','
                    << rec.metrics.baseline_prime_pairs << ',';
                if (rec.metrics.first_hit_index) out << *rec.metrics.first_hit_index;
                out << '\n';
            }
            break;
    }

    for (const SweepRecord& rec : records) {
        if (rec.counterexample) {
            err << "no partition found for N=" << rec.n_value << '\n';
            return kExhausted;
        }
    }
    return kOk;
}

int cmd_verify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.numbers.size() != 2 || !inv.modes.empty()) return usage(err);
    const uint64_t from = inv.numbers[0];
    const uint64_t to = inv.numbers[1];
    if (from % 2 != 0 || to % 2 != 0) {
        err << "verify: bounds must be even\n";
        return kUsageError;
    }
    if (from < 14 || from > to) {
        err << "verify: need 14 <= FROM <= TO\n";
        return kUsageError;
    }
    uint64_t cap = 0;
    if (!sieve_cap(cap, err)) return kUsageError;
    const PrimeSieve sieve = build_sieve(to, cap);

    uint64_t checked = 0;
    std::optional<uint64_t> failed;
    for (uint64_t n = from; n <= to; n += 2) {
        ++checked;
        if (!verify_completeness(n, sieve)) {
            failed = n;
            break;
        }
    }

    switch (inv.format) {
        case Format::Text:
            out << "from=" << from << " to=" << to << " checked=" << checked
                << " ok=" << (failed ? "false" : "true");
            if (failed) out << " failed_n=" << *failed;
            out << '\n';
            break;
        case Format::Json: {
            ordered_json j{{"from", from},
                           {"to", to},
                           {"checked", checked},
                           {"ok", !failed.has_value()}};
            if (failed) j["failed_n"] = *failed;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "from,to,checked,ok,failed_n\n"
                << from << ',' << to << ',' << checked << ','
                << (failed ? "false" : "true") << ',';
            if (failed) out << *failed;
            out << '\n';
            break;
    }

    if (failed) {
        err << "completeness failed at N=" << *failed << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

int dispatch(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.command == "classify") return cmd_classify(inv, out, err);
    if (inv.command == "pairs") return cmd_pairs(inv, out, err);
    if (inv.command == "sweep") return cmd_sweep(inv, out, err);
    if (inv.command == "compare") return cmd_compare(inv, out, err);
    if (inv.command == "verify") return cmd_verify(inv, out, err);
    return usage(err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) return usage(err);

    Invocation inv;
    inv.command = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--format") {
            if (++i == args.size()) return usage(err);
            if (args[i] == "text") inv.format = Format::Text;
            else if (args[i] == "json") inv.format = Format::Json;
            else if (args[i] == "csv") inv.format = Format::Csv;
            else return usage(err);
        } else if (arg == "--out") {
            if (++i == args.size()) return usage(err);
            inv.out_path = args[i];
        } else if (arg == "--first" || arg == "--all" || arg == "--candidates") {
            inv.modes.push_back(arg);
        } else if (arg.size() >= 2 && arg[0] == '-' && arg[1] == '-') {
            err << "unknown option " << arg << '\n';
            return usage(err);
        } else {
            uint64_t value = 0;
            if (!parse_u64(arg, value)) {
                err << "not a non-negative integer: " << arg << '\n';
                return kUsageError;
            }
            inv.numbers.push_back(value);
        }
    }

    std::ofstream file;
    if (!inv.out_path.empty()) {
        file.open(inv.out_path);
        if (!file) {
            err << "cannot open " << inv.out_path << " for writing\n";
            return kIoError;
        }
    }
    std::ostream& body = inv.out_path.empty() ? out : file;

    int code;
    try {
        code = dispatch(inv, body, err);
    } catch (const std::length_error& e) {
        err << "sieve too large: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    body.flush();
    if (!body) {
        err << "write failed" << (inv.out_path.empty() ? "" : " for " + inv.out_path)
            << '\n';
        return kIoError;
    }
    return code;
}

}  // namespace goldbach::cli
