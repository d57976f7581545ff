// sumcli: command-line front end for the sum-channel code library.
//
// File formats: codeword and received-matrix files carry one JSON header
// line followed by the matrix rows in text form. All reports are JSON or
// CSV with a top-level schema version.
//
// Exit codes: 0 success, 2 invalid argument, 3 decode failure,
// 4 ambiguity, 5 resource limit.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "sumch/algebra.hpp"
#include "sumch/bitword.hpp"
#include "sumch/bounds.hpp"
#include "sumch/channel.hpp"
#include "sumch/constructions.hpp"
#include "sumch/misalign.hpp"

using namespace sumch;
using nlohmann::json;

namespace {

constexpr std::uint64_t kCliCap = 1ull << 24;

// ---------------------------------------------------------------------------
// Construction selection

struct ConstructionFlags {
    std::string name;           // c1 | c2 | c3 | c4
    std::size_t l = 2;
    std::size_t n = 0;
    unsigned slack = 3;
    bool auto_coset = false;
    std::uint64_t syn1 = 0, syn2 = 0; // c1 residues / c2 check symbols
    int b1 = 0, b2 = 0;               // c1 parities / c3 parities
    std::uint32_t coset = 0;          // c4 Hamming coset
    std::uint64_t cap = kCliCap;

    void attach(CLI::App* cmd) {
        cmd->add_option("--construction", name, "one of c1, c2, c3, c4")
            ->required()
            ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}));
        cmd->add_option("--l", l, "row count (c2, c4)");
        cmd->add_option("--n", n, "column count")->required();
        cmd->add_option("--slack", slack, "window slack constant (c1, c2)");
        cmd->add_flag("--auto-coset", auto_coset, "pick the largest coset (c1)");
        cmd->add_option("--syn1", syn1, "first check residue/symbol (c1, c2)");
        cmd->add_option("--syn2", syn2, "second check residue/symbol (c1, c2)");
        cmd->add_option("--b1", b1, "first row parity (c1, c3)");
        cmd->add_option("--b2", b2, "second row parity (c1, c3)");
        cmd->add_option("--coset", coset, "Hamming coset syndrome (c4)");
        cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);
    }
};

// One construction behind a uniform surface.
struct Codec {
    std::size_t l = 2;
    std::size_t n = 0;
    json meta;
    std::function<bool(const CodeMatrix&)> member;
    std::function<CodeMatrix(const ReceivedMatrix&, DecodeTrace*)> decode;
    std::function<std::vector<CodeMatrix>()> enumerate;
};

Codec make_codec(const ConstructionFlags& f) {
    Codec c;
    c.meta["schema"] = 1;
    c.meta["construction"] = f.name;
    c.meta["n"] = f.n;
    if (f.name == "c1") {
        Construction1Params p;
        if (f.auto_coset) {
            auto best = c1_search_coset(f.n, f.slack, f.cap);
            p = best.params;
        } else {
            p = Construction1Params::make(f.n, f.slack, f.syn1, f.b1, f.syn2, f.b2);
        }
        c.l = 2;
        c.meta["l"] = 2;
        c.meta["slack"] = f.slack;
        c.meta["coset"] = {{"syn1", p.svt1.c}, {"b1", p.svt1.b},
                           {"syn2", p.svt2.c}, {"b2", p.svt2.b}};
        c.member = [p](const CodeMatrix& x) { return c1_member(x, p); };
        c.decode = [p](const ReceivedMatrix& y, DecodeTrace* t) { return c1_decode(y, p, t); };
        std::uint64_t cap = f.cap;
        c.enumerate = [p, cap] { return c1_enumerate(p, cap); };
    } else if (f.name == "c2") {
        auto p = Construction2Params::make(f.l, f.n, f.slack,
                                           FieldElement{static_cast<std::uint32_t>(f.syn1)},
                                           FieldElement{static_cast<std::uint32_t>(f.syn2)});
        c.l = f.l;
        c.meta["l"] = f.l;
        c.meta["slack"] = f.slack;
        c.meta["coset"] = {{"s0", p.mds.s0.coeffs}, {"s1", p.mds.s1.coeffs}};
        c.member = [p](const CodeMatrix& x) { return c2_member(x, p); };
        c.decode = [p](const ReceivedMatrix& y, DecodeTrace* t) { return c2_decode(y, p, t); };
        std::uint64_t cap = f.cap;
        c.enumerate = [p, cap] { return c2_enumerate(p, cap); };
    } else if (f.name == "c3") {
        auto p = Construction3Params::make(f.n, f.b1, f.b2);
        c.l = 2;
        c.meta["l"] = 2;
        c.meta["coset"] = {{"b1", f.b1}, {"b2", f.b2}};
        c.member = [p](const CodeMatrix& x) { return c3_member(x, p); };
        c.decode = [p](const ReceivedMatrix& y, DecodeTrace*) { return c3_decode(y, p); };
        std::uint64_t cap = f.cap;
        c.enumerate = [p, cap] { return c3_enumerate(p, cap); };
    } else {
        auto p = Construction4Params::make(f.l, f.n, f.coset);
        c.l = f.l;
        c.meta["l"] = f.l;
        c.meta["coset"] = {{"syndrome", f.coset}};
        c.member = [p](const CodeMatrix& x) { return c4_member(x, p); };
        c.decode = [p](const ReceivedMatrix& y, DecodeTrace*) { return c4_decode(y, p); };
        std::uint64_t cap = f.cap;
        c.enumerate = [p, cap] { return c4_enumerate(p, cap); };
    }
    return c;
}

// ---------------------------------------------------------------------------
// File plumbing

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_argument("cannot open output file: " + path);
    out << body;
}

std::string read_input(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw invalid_argument("cannot open input file: " + path);
        in = &file;
    }
    std::ostringstream buf;
    buf << in->rdbuf();
    return buf.str();
}

struct MatrixFile {
    json header;
    std::vector<BitWord> rows;
};

MatrixFile parse_matrix_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw invalid_argument("empty matrix file");
    MatrixFile f;
    try {
        f.header = json::parse(line);
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("bad file header: ") + e.what());
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        f.rows.push_back(BitWord::from_string(line));
    }
    if (f.rows.empty()) throw invalid_argument("matrix file has no rows");
    return f;
}

std::string render_matrix_file(const json& header, const std::vector<BitWord>& rows) {
    std::string out = header.dump();
    out += '\n';
    for (const auto& r : rows) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

json event_to_json(const ErrorEvent& e) {
    json j{{"row", e.row}, {"kind", to_string(e.kind)}, {"position", e.position}};
    if (e.kind != ErrorKind::Delete) j["value"] = e.value;
    return j;
}

// "a..b" or a single value.
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        std::size_t v = std::stoull(s);
        return {v, v};
    }
    std::size_t lo = std::stoull(s.substr(0, dots));
    std::size_t hi = std::stoull(s.substr(dots + 2));
    if (lo > hi) throw invalid_argument("empty range: " + s);
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_encode(const ConstructionFlags& flags, std::uint64_t index, const std::string& out) {
    Codec codec = make_codec(flags);
    auto codebook = codec.enumerate();
    if (index >= codebook.size())
        throw invalid_argument("index " + std::to_string(index) + " out of range: |codebook| = " +
                               std::to_string(codebook.size()));
    CodeMatrix x = encode_index(index, codebook);
    json header = codec.meta;
    header["index"] = index;
    header["codebook_size"] = codebook.size();
    write_output(out, render_matrix_file(header, x.rows()));
    return 0;
}

int cmd_corrupt(const std::string& in, unsigned t, const std::string& kind, std::uint64_t seed,
                const std::string& out) {
    MatrixFile f = parse_matrix_file(read_input(in));
    CodeMatrix x(f.rows);
    auto [received, events] = corrupt(x, t, error_type_from_string(kind), seed);
    json header{{"schema", 1},
                {"nominal_length", received.nominal_length()},
                {"rows", received.row_count()},
                {"t", t},
                {"kind", kind},
                {"seed", seed}};
    header["events"] = json::array();
    for (const auto& e : events) header["events"].push_back(event_to_json(e));
    write_output(out, render_matrix_file(header, received.rows()));
    return 0;
}

int cmd_decode(const ConstructionFlags& flags, const std::string& in, const std::string& out) {
    Codec codec = make_codec(flags);
    MatrixFile f = parse_matrix_file(read_input(in));
    std::size_t nominal = f.header.value("nominal_length", flags.n);
    ReceivedMatrix y(f.rows, nominal);
    DecodeTrace trace;
    CodeMatrix x = codec.decode(y, &trace);
    json header = codec.meta;
    header["trace"] = {{"case", trace.case_name},
                       {"j1", trace.j1},
                       {"j2", trace.j2},
                       {"path", trace.path}};
    write_output(out, render_matrix_file(header, x.rows()));
    return 0;
}

int cmd_verify(const ConstructionFlags& flags, unsigned t, const std::string& kind,
               const std::string& out) {
    Codec codec = make_codec(flags);
    ErrorType type = error_type_from_string(kind);
    auto codebook = codec.enumerate();

    json report = codec.meta;
    report["t"] = t;
    report["kind"] = kind;
    report["codebook_size"] = codebook.size();

    auto ball_check = is_correcting_code(codebook, t, type, flags.cap);
    report["pairs_checked"] = ball_check.pairs_checked;
    bool pass = ball_check.correcting;
    if (!pass && ball_check.witness_pair) {
        report["witness"] = {{"first", to_text(ball_check.witness_pair->first)},
                             {"second", to_text(ball_check.witness_pair->second)},
                             {"common_output", to_text(*ball_check.common_output)}};
    }

    // Decoder round trip over the patterns the construction guarantees:
    // distinct-row deletion pairs for the two-deletion codes, every single
    // edit for the single-edit codes.
    std::uint64_t patterns = 0;
    std::optional<std::string> first_failure;
    bool two_del = flags.name == "c1" || flags.name == "c2";
    for (const auto& x : codebook) {
        if (first_failure) break;
        SumMatrix xp = sum_matrix(x);
        std::vector<std::vector<ErrorEvent>> trials;
        if (two_del && type == ErrorType::D) {
            trials = distinct_row_deletion_pairs(xp);
        } else if (!two_del && t == 1) {
            for (std::size_t r = 1; r <= xp.row_count(); ++r) {
                const BitWord& row = xp.row(r);
                if (type == ErrorType::S || type == ErrorType::SID)
                    for (std::size_t p = 1; p <= row.size(); ++p)
                        trials.push_back({{r, ErrorKind::Substitute, p, 1 - row.bit(p)}});
                if (type == ErrorType::D || type == ErrorType::ID || type == ErrorType::SID)
                    for (const auto& run : runs(row).runs)
                        trials.push_back({{r, ErrorKind::Delete, run.start, 0}});
                if (type == ErrorType::I || type == ErrorType::ID || type == ErrorType::SID)
                    for (std::size_t p = 1; p <= row.size() + 1; ++p)
                        for (int v = 0; v < 2; ++v)
                            trials.push_back({{r, ErrorKind::Insert, p, v}});
            }
        }
        for (const auto& events : trials) {
            ++patterns;
            CodeMatrix got;
            try {
                got = codec.decode(apply_errors(xp, events), nullptr);
            } catch (const std::exception& e) {
                first_failure = "decode threw on a guaranteed pattern: " + std::string(e.what());
                break;
            }
            if (!(got == x)) {
                first_failure = "decode returned a different codeword:\n" + to_text(got) +
                                "expected:\n" + to_text(x);
                break;
            }
        }
    }
    report["patterns_checked"] = patterns;
    if (first_failure) {
        pass = false;
        report["round_trip_failure"] = *first_failure;
    }
    report["pass"] = pass;
    write_output(out, report.dump() + "\n");
    return pass ? 0 : 3;
}

int cmd_bounds(bool edit, bool twodel, bool exact, std::size_t l, const std::string& n_range,
               unsigned t, const std::string& kind, const std::string& format,
               std::uint64_t cap, const std::string& out) {
    if (edit + twodel + exact != 1)
        throw invalid_argument("bounds: pick exactly one of --edit, --twodel, --exact");
    auto [n_lo, n_hi] = parse_range(n_range);
    json rows = json::array();
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        json row{{"n", n}};
        if (edit) {
            unsigned r = HammingParams::make(l, 0).r;
            row["l"] = l;
            row["sphere_packing_bound"] = sphere_packing_edit_bound(l, n).str();
            row["construction_size"] = (BigInt(1) << (n * l - r)).str();
        } else if (twodel) {
            BoundReport rep = upper_bound_A_2del(n);
            row["formula"] = rep.value.str();
            row["regime"] = rep.regime;
            if ((BigInt(1) << (2 * n)) <= cap) {
                // Rebuild the winning cover and count it directly.
                std::size_t best_k = 1;
                BigInt best = clique_cover_size_formula(n, 1);
                for (std::size_t k = 2; k <= n; ++k) {
                    if (n % k) continue;
                    BigInt v = clique_cover_size_formula(n, k);
                    if (v < best) {
                        best = v;
                        best_k = k;
                    }
                }
                row["k"] = best_k;
                row["constructed"] = std::to_string(build_clique_cover_2del(n, best_k, cap).size());
            }
        } else {
            row["l"] = l;
            row["t"] = t;
            row["kind"] = kind;
            auto r = exact_max_code(l, n, t, error_type_from_string(kind), cap, cap);
            row["exact_max"] = r.size;
        }
        rows.push_back(std::move(row));
    }

    std::string body;
    if (format == "json") {
        body = json{{"schema", 1}, {"rows", rows}}.dump() + "\n";
    } else {
        // CSV: header from the union of keys, values in key order.
        std::vector<std::string> cols;
        for (const auto& row : rows)
            for (auto it = row.begin(); it != row.end(); ++it)
                if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                    cols.push_back(it.key());
        std::sort(cols.begin(), cols.end());
        for (std::size_t i = 0; i < cols.size(); ++i)
            body += (i ? "," : "") + cols[i];
        body += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i) body += ',';
                if (row.contains(cols[i])) {
                    const json& v = row[cols[i]];
                    std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
                    if (cell.find(',') != std::string::npos) cell = '"' + cell + '"';
                    body += cell;
                }
            }
            body += '\n';
        }
    }
    write_output(out, body);
    return 0;
}

int cmd_dna(const std::string& strand, std::size_t corrupt_row, std::size_t corrupt_pos,
            bool decode_flag, const std::string& out) {
    DnaPartitions parts = dna_partitions(strand);
    std::string body;
    body += parts.first.to_string() + "\n";
    body += parts.second.to_string() + "\n";
    body += parts.third.to_string() + "\n";
    bool identity = parts.third == xor_words(parts.first, parts.second);
    body += std::string("xor identity: ") + (identity ? "ok" : "BROKEN") + "\n";

    if (corrupt_row || decode_flag) {
        CodeMatrix x({parts.first, parts.second});
        SumMatrix xp = sum_matrix(x);
        std::vector<ErrorEvent> events;
        if (corrupt_row) {
            if (corrupt_row > 3 || corrupt_pos < 1 || corrupt_pos > strand.size())
                throw invalid_argument("dna: corrupt position out of range");
            events.push_back({corrupt_row, ErrorKind::Substitute, corrupt_pos,
                              1 - xp.row(corrupt_row).bit(corrupt_pos)});
            ReceivedMatrix y = apply_errors(xp, events);
            for (const auto& r : y.rows()) body += r.to_string() + "\n";
        }
        if (decode_flag) {
            auto p = Construction3Params::make(strand.size(), parity(parts.first),
                                               parity(parts.second));
            CodeMatrix xhat = c3_decode(apply_errors(xp, events), p);
            body += "recovered: " + dna_strand_from_partitions(xhat.row(1), xhat.row(2)) + "\n";
        }
    }
    write_output(out, body);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-channel code toolkit"};
    app.require_subcommand(1);

    ConstructionFlags enc_flags, dec_flags, ver_flags;
    std::uint64_t index = 0;
    std::string in_path, out_path, events_kind = "D";
    unsigned t = 2;
    std::uint64_t seed = 0;

    auto* enc = app.add_subcommand("encode", "write the codeword for an information index");
    enc_flags.attach(enc);
    enc->add_option("--index", index, "information index")->required();
    enc->add_option("--out", out_path, "output file (default stdout)");

    auto* cor = app.add_subcommand("corrupt", "apply seeded channel errors to a codeword file");
    std::string cor_in, cor_out, cor_kind = "D";
    unsigned cor_t = 2;
    std::uint64_t cor_seed = 0;
    cor->add_option("--in", cor_in, "codeword file (default stdin)");
    cor->add_option("--t", cor_t, "number of errors")->required();
    cor->add_option("--kind", cor_kind, "error type: S, D, I, ID, SID")->required();
    cor->add_option("--seed", cor_seed, "RNG seed");
    cor->add_option("--out", cor_out, "output file (default stdout)");

    auto* dec = app.add_subcommand("decode", "recover the codeword from a received file");
    dec_flags.attach(dec);
    dec->add_option("--in", in_path, "received file (default stdin)");
    dec->add_option("--out", out_path, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "ball disjointness plus decoder round trips");
    ver_flags.attach(ver);
    std::string ver_out;
    ver->add_option("--t", t, "number of errors")->required();
    ver->add_option("--kind", events_kind, "error type: S, D, I, ID, SID")->required();
    ver->add_option("--out", ver_out, "report file (default stdout)");

    auto* bnd = app.add_subcommand("bounds", "bound and construction-size tables");
    bool edit = false, twodel = false, exact = false;
    std::size_t bnd_l = 2;
    std::string bnd_n = "2..6", bnd_kind = "SID", bnd_format = "csv", bnd_out;
    unsigned bnd_t = 1;
    std::uint64_t bnd_cap = kCliCap;
    bnd->add_flag("--edit", edit, "single-edit sphere packing vs construction size");
    bnd->add_flag("--twodel", twodel, "two-deletion clique-cover bound");
    bnd->add_flag("--exact", exact, "exact maximum code search");
    bnd->add_option("--l", bnd_l, "row count");
    bnd->add_option("--n", bnd_n, "column count or range a..b");
    bnd->add_option("--t", bnd_t, "error budget (--exact)");
    bnd->add_option("--kind", bnd_kind, "error type (--exact)");
    bnd->add_option("--format", bnd_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bnd->add_option("--cap", bnd_cap, "enumeration cap")->check(CLI::PositiveNumber);
    bnd->add_option("--out", bnd_out, "output file (default stdout)");

    auto* dna = app.add_subcommand("dna", "strand partitions and the l=2 pipeline");
    std::string strand, dna_out;
    std::size_t dna_row = 0, dna_pos = 0;
    bool dna_decode = false;
    dna->add_option("strand", strand, "strand over A, C, G, T")->required();
    dna->add_option("--corrupt-row", dna_row, "read to corrupt (1..3)");
    dna->add_option("--corrupt-pos", dna_pos, "position to flip");
    dna->add_flag("--decode", dna_decode, "run the correction pipeline");
    dna->add_option("--out", dna_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (*enc) return cmd_encode(enc_flags, index, out_path);
        if (*cor) return cmd_corrupt(cor_in, cor_t, cor_kind, cor_seed, cor_out);
        if (*dec) return cmd_decode(dec_flags, in_path, out_path);
        if (*ver) return cmd_verify(ver_flags, t, events_kind, ver_out);
        if (*bnd) return cmd_bounds(edit, twodel, exact, bnd_l, bnd_n, bnd_t, bnd_kind,
                                    bnd_format, bnd_cap, bnd_out);
        if (*dna) return cmd_dna(strand, dna_row, dna_pos, dna_decode, dna_out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const decode_failure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return 3;
    } catch (const ambiguity_error& e) {
        std::cerr << "ambiguity: " << e.what() << "\n";
        return 4;
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
