#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "joingeo/joingeo.hpp"

namespace {

using namespace joingeo;
using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
    std::string output;
    std::string format = "text";
    int jobs = 1;
    int max_n = 0;  // 0: per-feature defaults
    std::uint64_t seed = 1;

    int enum_bound() const { return max_n ? std::min(max_n, kMaxExhaustivePoints) : kDefaultEnumBound; }
    int closed_bound() const { return max_n ? max_n : kDefaultClosedEnumBound; }

    ThmOptions thm_options() const {
        ThmOptions o;
        if (max_n) {
            o.exact_subset_bound = std::min(max_n, kMaxExactSubsetBound);
            o.closed_enum_bound = max_n;
        }
        o.seed = seed;
        return o;
    }
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty())
        std::cout << text;
    else
        write_text_file(g.output, text);
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["points"] = w.points;
    ordered_json sets = ordered_json::array();
    for (const PointSet& s : w.sets) {
        ordered_json members = ordered_json::array();
        for (int m : s) members.push_back(m);
        sets.push_back(members);
    }
    j["sets"] = sets;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

ordered_json report_json(const CheckReport& r) {
    ordered_json j;
    j["id"] = r.label;
    j["ok"] = r.ok;
    if (r.witness) j["witness"] = witness_json(*r.witness);
    return j;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string kind;
    int p = 0;
    int dim = 0;
    int w = 0;
    int h = 0;
    int n = 0;
    bool lines = false;
};

void require_usage(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

int run_generate(const GlobalOpts& g, const GenerateArgs& a) {
    std::optional<SpaceFile> space;
    std::optional<LineFile> line_file;

    if (a.kind == "affine") {
        require_usage(a.p > 0 && a.dim > 0, "generate affine needs --p and --dim");
        PrimeField f(a.p);
        if (a.lines)
            line_file = line_file_from(affine_line_structure(f, a.dim), affine_point_labels(f, a.dim));
        else
            space = SpaceFile{affine_join_space(f, a.dim), affine_point_labels(f, a.dim)};
    } else if (a.kind == "projective") {
        require_usage(a.p > 0 && a.dim > 0, "generate projective needs --p and --dim");
        ProjectiveGeometry pg = projective_space(PrimeField(a.p), a.dim);
        if (a.lines)
            line_file = line_file_from(pg.lines, pg.labels);
        else
            space = SpaceFile{std::move(pg.space), std::move(pg.labels)};
    } else if (a.kind == "grid") {
        require_usage(a.w > 0 && a.h > 0, "generate grid needs --w and --h");
        require_usage(!a.lines, "grid spaces have no line representation");
        GridSpec spec{a.w, a.h};
        space = SpaceFile{grid_segment_space(spec), grid_point_labels(spec)};
    } else if (a.kind == "minimal") {
        require_usage(a.n > 0, "generate minimal needs --n");
        JoinSpace s = minimal_join_space(a.n);
        if (a.lines)
            line_file = line_file_from(associated_line_structure(s));
        else
            space = SpaceFile{std::move(s), {}};
    } else {
        require_usage(false, "unknown kind \"" + a.kind + "\" (affine|projective|grid|minimal)");
    }

    emit(g, space ? serialize(*space) : serialize(*line_file));
    return 0;
}

// -------------------------------------------------------------------- check

const std::vector<std::string> kJoinSpaceChecks = {
    "validate",          "transitive", "symmetric",     "equivalence-relational",
    "join-transitive",   "join-equivalence-relational", "pasch",
    "preprojective",     "dense",      "projective",    "proper",
    "exchange",          "matroid"};

CheckReport run_join_space_check(const JoinSpace& s, const std::string& id, const GlobalOpts& g) {
    if (id == "validate") return CheckReport::pass("validate");
    if (id == "transitive") return check_transitive(s);
    if (id == "symmetric") return check_symmetric(s);
    if (id == "equivalence-relational") return check_equivalence_relational(s);
    if (id == "join-transitive") return check_join_transitive(s);
    if (id == "join-equivalence-relational") return check_join_equivalence_relational(s);
    if (id == "pasch") return check_pasch(s);
    if (id == "preprojective") return check_preprojective(s);
    if (id == "dense") return check_dense(s);
    if (id == "projective") return check_projective(s);
    if (id == "proper") return check_proper(s);
    if (id == "exchange") return check_exchange(s, g.closed_bound());
    if (id == "matroid") return check_matroid(s, g.closed_bound());
    throw std::invalid_argument("unknown check \"" + id + "\"");
}

int run_check(const GlobalOpts& g, const std::string& path, std::vector<std::string> ids) {
    std::string text = read_text_file(path);
    std::string kind = sniff_format(text);

    std::vector<CheckReport> reports;
    if (kind == "joinspace-v1") {
        SpaceFile f = parse_space_file(text);
        if (ids.empty()) ids = kJoinSpaceChecks;
        for (const std::string& id : ids) reports.push_back(run_join_space_check(f.space, id, g));
    } else if (kind == "linespace-v1") {
        LineFile f = parse_line_file(text);
        if (ids.empty()) ids = {"lines-valid"};
        CheckReport valid = validate_lines(f.to_line_space());
        std::optional<JoinSpace> assoc;
        for (const std::string& id : ids) {
            if (id == "lines-valid") {
                reports.push_back(valid);
                continue;
            }
            if (!valid.ok) {
                CheckReport r = valid;
                r.label = id;
                if (r.witness)
                    r.witness->note = "line structure invalid: " + (valid.witness ? valid.witness->note : "");
                reports.push_back(r);
                continue;
            }
            if (!assoc) assoc = associated_join_space(f.to_line_space());
            reports.push_back(run_join_space_check(*assoc, id, g));
        }
    } else {
        throw FileFormatError(path + ": unknown format \"" + kind + "\"");
    }

    bool all_ok = true;
    if (g.format == "structured") {
        ordered_json j;
        j["file"] = path;
        j["checks"] = ordered_json::array();
        for (const CheckReport& r : reports) {
            j["checks"].push_back(report_json(r));
            all_ok = all_ok && r.ok;
        }
        emit(g, j.dump(2) + "\n");
    } else {
        std::string out;
        for (const CheckReport& r : reports) {
            out += r.to_string() + "\n";
            all_ok = all_ok && r.ok;
        }
        emit(g, out);
    }
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------- verify

struct Disagreement {
    std::uint64_t index = 0;
    std::string detail;
    JoinSpace model;
};

struct VerifyTally {
    std::uint64_t scanned = 0;
    std::uint64_t skipped = 0;
    std::optional<Disagreement> bad;

    void note(const JoinSpace& s, std::uint64_t index, const std::optional<std::string>& detail,
              bool skipped_model) {
        ++scanned;
        if (skipped_model) ++skipped;
        if (detail && (!bad || index < bad->index)) bad = Disagreement{index, *detail, s};
    }

    void merge(const VerifyTally& other) {
        scanned += other.scanned;
        skipped += other.skipped;
        if (other.bad && (!bad || other.bad->index < bad->index)) bad = other.bad;
    }
};

std::optional<std::string> disagreement_detail(const ConditionVector& v) {
    if (!v.all_equal()) return v.to_string();
    return std::nullopt;
}

std::optional<std::string> identity_detail(const std::string& lhs_name, bool lhs,
                                           const std::string& rhs_name, bool rhs) {
    if (lhs == rhs) return std::nullopt;
    std::ostringstream os;
    os << lhs_name << " is " << (lhs ? "true" : "false") << " but " << rhs_name << " is "
       << (rhs ? "true" : "false");
    return os.str();
}

std::optional<std::string> verify_model(const std::string& theorem, const JoinSpace& s,
                                        const ThmOptions& opts, bool& skipped) {
    skipped = false;
    if (theorem == "thm-join-transitivity") return disagreement_detail(join_transitivity_criterion(s, opts));
    if (theorem == "thm-join-equiv") {
        ConditionVector v = join_equivalence_criterion(s);
        if (!v.hypothesis_met) {
            skipped = true;
            return std::nullopt;
        }
        return disagreement_detail(v);
    }
    if (theorem == "thm-matroid") {
        ConditionVector v = matroid_criterion(s, opts.closed_enum_bound);
        if (!v.hypothesis_met) {
            skipped = true;
            return std::nullopt;
        }
        return disagreement_detail(v);
    }
    if (theorem == "cor-projectivity")
        return identity_detail("projective", check_projective(s).ok, "dense and join-equivalence-relational",
                               check_dense(s).ok && check_join_equivalence_relational(s).ok);
    if (theorem == "cor-matroid-pre")
        return identity_detail("preprojective", check_preprojective(s).ok, "join-transitive and matroid",
                               check_join_transitive(s).ok &&
                                   check_matroid(s, opts.closed_enum_bound).ok);
    if (theorem == "cor-matroid-proj")
        return identity_detail(
            "projective", check_projective(s).ok, "dense and join-transitive and matroid",
            check_dense(s).ok && check_join_transitive(s).ok && check_matroid(s, opts.closed_enum_bound).ok);
    if (theorem == "thm-correspondence") {
        if (!check_equivalence_relational(s).ok) {
            skipped = true;
            return std::nullopt;
        }
        CheckReport rt = roundtrip_check(s);
        if (!rt.ok) return rt.to_string();
        return identity_detail("projective join space", check_projective(s).ok, "projective line space",
                               check_projective_line_space(associated_line_structure(s)).ok);
    }
    throw std::invalid_argument("unknown theorem \"" + theorem + "\"");
}

struct VerifyArgs {
    std::string theorem;
    int exhaustive_n = 0;
    int sampled_n = 0;
    std::uint64_t count = 0;
    std::string file;
};

int report_verify(const GlobalOpts& g, const std::string& theorem, const VerifyTally& tally,
                  const std::string& scope) {
    std::string quarantine;
    if (tally.bad) {
        quarantine = g.output.empty() ? "quarantine-" + theorem + ".json" : g.output;
        save_space_file(quarantine, SpaceFile{tally.bad->model, {}});
    }

    if (g.format == "structured") {
        ordered_json j;
        j["theorem"] = theorem;
        j["scope"] = scope;
        j["scanned"] = tally.scanned;
        j["outside_hypothesis"] = tally.skipped;
        j["ok"] = !tally.bad;
        if (tally.bad) {
            j["model_index"] = tally.bad->index;
            j["detail"] = tally.bad->detail;
            j["quarantine"] = quarantine;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::ostringstream os;
        os << theorem << " over " << scope << ": scanned " << tally.scanned << " model"
           << (tally.scanned == 1 ? "" : "s");
        if (tally.skipped) os << " (" << tally.skipped << " outside hypothesis)";
        if (!tally.bad) {
            os << ", agreement\n";
        } else {
            os << "\ndisagreement at model " << tally.bad->index << ":\n"
               << tally.bad->detail << "\nquarantined model written to " << quarantine << "\n";
        }
        std::cout << os.str();
    }
    return tally.bad ? 1 : 0;
}

int run_verify(const GlobalOpts& g, const VerifyArgs& a) {
    const ThmOptions opts = g.thm_options();
    int modes = (a.exhaustive_n > 0) + (a.sampled_n > 0) + (!a.file.empty());
    require_usage(modes == 1, "verify needs exactly one of --exhaustive N, --sampled N --count C, --file PATH");

    VerifyTally tally;
    std::string scope;

    auto scan_one = [&](VerifyTally& t, const JoinSpace& s, std::uint64_t index) {
        bool skipped = false;
        std::optional<std::string> detail = verify_model(a.theorem, s, opts, skipped);
        t.note(s, index, detail, skipped);
    };

    if (a.exhaustive_n > 0) {
        scope = "exhaustive n=" + std::to_string(a.exhaustive_n);
        std::uint64_t total = join_space_count(a.exhaustive_n);
        int jobs = std::max(1, g.jobs);
        if (jobs == 1 || total < 64) {
            enumerate_join_spaces(
                a.exhaustive_n, [&](const JoinSpace& s, std::uint64_t i) { scan_one(tally, s, i); },
                g.enum_bound());
        } else {
            detail::check_exhaustive_bound(a.exhaustive_n, g.enum_bound());
            std::vector<VerifyTally> parts(jobs);
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs; ++w) {
                std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
                threads.emplace_back([&, w, lo, hi] {
                    enumerate_join_spaces_range(
                        a.exhaustive_n, lo, hi,
                        [&, w](const JoinSpace& s, std::uint64_t i) { scan_one(parts[w], s, i); },
                        g.enum_bound());
                });
            }
            for (std::thread& t : threads) t.join();
            for (const VerifyTally& part : parts) tally.merge(part);
        }
    } else if (a.sampled_n > 0) {
        require_usage(a.count > 0, "verify --sampled needs --count");
        scope = "sampled n=" + std::to_string(a.sampled_n) + " count=" + std::to_string(a.count) +
                " seed=" + std::to_string(g.seed);
        sample_join_spaces(a.sampled_n, a.count, g.seed,
                           [&](const JoinSpace& s, std::uint64_t i) { scan_one(tally, s, i); });
    } else {
        scope = a.file;
        std::string text = read_text_file(a.file);
        std::string kind = sniff_format(text);
        if (kind == "joinspace-v1") {
            scan_one(tally, parse_space_file(text).space, 0);
        } else if (kind == "linespace-v1") {
            LineFile f = parse_line_file(text);
            CheckReport valid = validate_lines(f.to_line_space());
            if (!valid.ok) {
                std::cout << valid.to_string() << "\n";
                return 1;
            }
            if (a.theorem == "thm-correspondence") {
                SetLineStructure ls = set_represent(f.to_line_space());
                CheckReport rt = roundtrip_check(ls);
                JoinSpace s = associated_join_space(ls);
                std::optional<std::string> detail;
                if (!rt.ok)
                    detail = rt.to_string();
                else
                    detail = identity_detail("projective line space", check_projective_line_space(ls).ok,
                                             "projective join space", check_projective(s).ok);
                tally.note(s, 0, detail, false);
            } else {
                scan_one(tally, associated_join_space(f.to_line_space()), 0);
            }
        } else {
            throw FileFormatError(a.file + ": unknown format \"" + kind + "\"");
        }
    }

    return report_verify(g, a.theorem, tally, scope);
}

// ----------------------------------------------------------- closure / rank

PointSet parse_subset(const std::string& text, int n) {
    PointSet s;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t start = token.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::size_t stop = token.find_last_not_of(" \t");
        int value = 0;
        try {
            value = std::stoi(token.substr(start, stop - start + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse point index \"" + token + "\"");
        }
        require_usage(value >= 0 && value < n,
                      "point " + std::to_string(value) + " out of range for " + std::to_string(n) + " points");
        s.add(value);
    }
    return s;
}

int run_closure(const GlobalOpts& g, const std::string& path, const std::string& subset) {
    SpaceFile f = load_space_file(path);
    PointSet a = parse_subset(subset, f.space.point_count());
    PointSet c = join_closure(f.space, a);
    if (g.format == "structured") {
        ordered_json j;
        j["subset"] = ordered_json::array();
        for (int m : a) j["subset"].push_back(m);
        j["closure"] = ordered_json::array();
        for (int m : c) j["closure"].push_back(m);
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, "closure of " + a.to_string() + " = " + c.to_string() + "\n");
    }
    return 0;
}

int run_rank(const GlobalOpts& g, const std::string& path) {
    SpaceFile f = load_space_file(path);
    RankResult r = matroid_rank(f.space, g.closed_bound());
    std::string warning;
    if (!r.matroid)
        warning = r.matroid_witness
                      ? "warning: not a matroid: " + r.matroid_witness->to_string()
                      : "note: matroid property unchecked at this size";
    if (g.format == "structured") {
        ordered_json j;
        j["rank"] = r.rank;
        j["dimension"] = r.dimension;
        j["matroid"] = r.matroid;
        if (!warning.empty()) j["warning"] = warning;
        emit(g, j.dump(2) + "\n");
    } else {
        std::string out;
        if (!warning.empty()) out += warning + "\n";
        out += "rank " + std::to_string(r.rank) + ", dimension " + std::to_string(r.dimension) + "\n";
        emit(g, out);
    }
    return 0;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    int n = 0;
    bool count_only = false;
    bool dedup = false;
    std::uint64_t sampled = 0;
};

int run_enumerate(const GlobalOpts& g, const EnumerateArgs& a) {
    require_usage(a.n >= 1, "enumerate needs --n");
    std::string out;
    std::uint64_t emitted = 0;
    std::set<std::string> seen;

    auto visit = [&](const JoinSpace& s) {
        if (a.dedup) {
            std::string key = serialize_compact(canonical_form(s));
            if (!seen.insert(key).second) return;
            ++emitted;
            if (!a.count_only) out += key + "\n";
        } else {
            ++emitted;
            if (!a.count_only) out += serialize_compact(s) + "\n";
        }
    };

    if (a.sampled > 0)
        sample_join_spaces(a.n, a.sampled, g.seed, visit);
    else
        enumerate_join_spaces(a.n, visit, g.enum_bound());

    if (a.count_only) out = std::to_string(emitted) + "\n";
    emit(g, out);
    return 0;
}

// --------------------------------------------------------------- correspond

int run_correspond(const GlobalOpts& g, const std::string& path) {
    std::string text = read_text_file(path);
    std::string kind = sniff_format(text);

    if (kind == "joinspace-v1") {
        SpaceFile f = parse_space_file(text);
        CheckReport rt = roundtrip_check(f.space);
        std::cout << rt.to_string() << "\n";
        if (!rt.ok) return 1;
        emit(g, serialize(line_file_from(associated_line_structure(f.space), f.labels)));
        return 0;
    }
    if (kind == "linespace-v1") {
        LineFile f = parse_line_file(text);
        CheckReport valid = validate_lines(f.to_line_space());
        if (!valid.ok) {
            std::cout << valid.to_string() << "\n";
            return 1;
        }
        SetLineStructure ls = set_represent(f.to_line_space());
        CheckReport rt = roundtrip_check(ls);
        std::cout << rt.to_string() << "\n";
        if (!rt.ok) return 1;
        emit(g, serialize(SpaceFile{associated_join_space(ls), f.labels}));
        return 0;
    }
    throw FileFormatError(path + ": unknown format \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite join-geometry toolkit: generate, check, and cross-verify join spaces and line spaces"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--output", g.output, "Write the primary artifact or report to this path");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--jobs", g.jobs, "Worker threads for verification scans")->check(CLI::PositiveNumber);
    app.add_option("--max-n", g.max_n, "Raise size guards (enumeration cap, closed-set bound)");
    app.add_option("--seed", g.seed, "Seed for sampled scopes");

    GenerateArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("generate", "Emit a classical space as a joinspace/linespace file");
    cmd_gen->fallthrough();
    // long-only help so the grid height option below can own the name "h"
    cmd_gen->set_help_flag("--help", "Print this help message and exit");
    cmd_gen->add_option("kind", gen.kind, "affine|projective|grid|minimal")->required();
    cmd_gen->add_option("--p", gen.p, "Field characteristic (prime)");
    cmd_gen->add_option("--dim", gen.dim, "Dimension");
    cmd_gen->add_option("--w", gen.w, "Grid width");
    cmd_gen->add_option("--h", gen.h, "Grid height");
    cmd_gen->add_option("--n", gen.n, "Point count (minimal)");
    cmd_gen->add_flag("--lines", gen.lines, "Emit the line structure instead of the join space");

    std::string check_path;
    std::vector<std::string> check_ids;
    CLI::App* cmd_check = app.add_subcommand("check", "Run axiom checks against a file");
    cmd_check->fallthrough();
    cmd_check->add_option("path", check_path, "Input file")->required();
    cmd_check->add_option("checks", check_ids, "Check ids (default: all applicable)");

    VerifyArgs ver;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Cross-verify a theorem over a scope of models");
    cmd_verify->fallthrough();
    cmd_verify
        ->add_option("theorem", ver.theorem,
                     "thm-join-transitivity|thm-join-equiv|cor-projectivity|thm-matroid|cor-matroid-pre|"
                     "cor-matroid-proj|thm-correspondence")
        ->required();
    cmd_verify->add_option("--exhaustive", ver.exhaustive_n, "Scan every join space on N points");
    cmd_verify->add_option("--sampled", ver.sampled_n, "Scan seeded samples on N points");
    cmd_verify->add_option("--count", ver.count, "Sample count for --sampled");
    cmd_verify->add_option("--file", ver.file, "Scan a single file");

    std::string closure_path, closure_subset;
    CLI::App* cmd_closure = app.add_subcommand("closure", "Join closure of a subset");
    cmd_closure->fallthrough();
    cmd_closure->add_option("path", closure_path, "Input joinspace file")->required();
    cmd_closure->add_option("--subset", closure_subset, "Comma-separated point indices (default empty)");

    std::string rank_path;
    CLI::App* cmd_rank = app.add_subcommand("rank", "Greedy basis rank and dimension");
    cmd_rank->fallthrough();
    cmd_rank->add_option("path", rank_path, "Input joinspace file")->required();

    EnumerateArgs en;
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "Stream join spaces on n points, one JSON line each");
    cmd_enum->fallthrough();
    cmd_enum->add_option("--n", en.n, "Point count")->required();
    cmd_enum->add_flag("--count-only", en.count_only, "Print only the number of models");
    cmd_enum->add_flag("--dedup", en.dedup, "Collapse isomorphic models to canonical forms");
    cmd_enum->add_option("--sampled", en.sampled, "Sample this many models instead of enumerating");

    std::string correspond_path;
    CLI::App* cmd_corr = app.add_subcommand("correspond", "Convert between joinspace and linespace files");
    cmd_corr->fallthrough();
    cmd_corr->add_option("path", correspond_path, "Input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(g, gen);
        if (cmd_check->parsed()) return run_check(g, check_path, check_ids);
        if (cmd_verify->parsed()) return run_verify(g, ver);
        if (cmd_closure->parsed()) return run_closure(g, closure_path, closure_subset);
        if (cmd_rank->parsed()) return run_rank(g, rank_path);
        if (cmd_enum->parsed()) return run_enumerate(g, en);
        if (cmd_corr->parsed()) return run_correspond(g, correspond_path);
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
