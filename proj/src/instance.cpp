#include "threshnet/instance.hpp"

#include <algorithm>
#include <sstream>

#include "threshnet/errors.hpp"

namespace threshnet {

namespace {

// strip comment and surrounding whitespace; empty result means "skip"
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    long long v = 0;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
        v = v * 10 + (tok[i] - '0');
        if (v > (1LL << 60)) return false;
    }
    out = tok[0] == '-' ? -v : v;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream in(s);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int want_int(const std::string& tok, int line, const char* what) {
    long long v;
    if (!parse_int(tok, v) || v < -(1LL << 31) || v > (1LL << 31))
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    int n = -1;
    std::vector<int> thresholds;
    std::vector<char> have_t;
    std::vector<Edge> edges;
    std::optional<AdoptionVector> x0;
    std::vector<int> seeds;
    std::optional<SeedingMode> mode;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        const std::string& kw = toks[0];

        if (kw == "nodes") {
            if (n >= 0) throw ParseError(lineno, "duplicate nodes line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: nodes N");
            n = want_int(toks[1], lineno, "node count");
            if (n < 0) throw ParseError(lineno, "node count must be >= 0");
            thresholds.assign(n, 0);
            have_t.assign(n, 0);
            continue;
        }
        if (n < 0) throw ParseError(lineno, "nodes line must come first");

        if (kw == "t") {
            if (toks.size() != 3) throw ParseError(lineno, "expected: t <id> <threshold>");
            int id = want_int(toks[1], lineno, "node id");
            int b = want_int(toks[2], lineno, "threshold");
            if (id < 0 || id >= n) throw ParseError(lineno, "node id out of range");
            if (have_t[id]) throw ParseError(lineno, "duplicate threshold for node " + toks[1]);
            if (b < 0) throw ParseError(lineno, "threshold must be >= 0");
            have_t[id] = 1;
            thresholds[id] = b;
        } else if (kw == "e") {
            if (toks.size() != 4) throw ParseError(lineno, "expected: e <u> <v> <w>");
            int u = want_int(toks[1], lineno, "endpoint");
            int v = want_int(toks[2], lineno, "endpoint");
            int w = want_int(toks[3], lineno, "weight");
            if (u >= v) throw ParseError(lineno, "edges require u < v");
            edges.push_back({u, v, w});
        } else if (kw == "x0") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: x0 <bitstring>");
            if (x0) throw ParseError(lineno, "duplicate x0 line");
            const std::string& bits = toks[1];
            if (static_cast<int>(bits.size()) != n)
                throw ParseError(lineno, "x0 length must equal node count");
            for (char c : bits)
                if (c != '0' && c != '1') throw ParseError(lineno, "x0 must be over {0,1}");
            x0 = AdoptionVector::from_string(bits);
        } else if (kw == "seed") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: seed <id>");
            int id = want_int(toks[1], lineno, "seed id");
            if (id < 0 || id >= n) throw ParseError(lineno, "seed id out of range");
            seeds.push_back(id);
        } else if (kw == "mode") {
            if (mode) throw ParseError(lineno, "duplicate mode line");
            if (toks.size() == 2 && toks[1] == "temporary") {
                mode = SeedingMode::temporary();
            } else if (toks.size() == 3 && toks[1] == "fixed") {
                int d = want_int(toks[2], lineno, "duration");
                if (d < 1) throw ParseError(lineno, "fixed duration must be >= 1");
                mode = SeedingMode::fixed(d);
            } else {
                throw ParseError(lineno, "expected: mode temporary | mode fixed <d>");
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }

    if (n < 0) throw ParseError(lineno, "missing nodes line");
    for (int i = 0; i < n; ++i)
        if (!have_t[i])
            throw ParseError(lineno, "missing threshold for node " + std::to_string(i));

    Instance inst;
    inst.net = build_network(n, std::move(thresholds), std::move(edges));
    inst.x0 = std::move(x0);
    if (!seeds.empty() || mode) {
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        Intervention iv;
        iv.seeds = std::move(seeds);
        iv.mode = mode.value_or(SeedingMode::temporary());
        inst.intervention = std::move(iv);
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "nodes " << inst.net.n << "\n";
    for (int i = 0; i < inst.net.n; ++i) out << "t " << i << " " << inst.net.thresholds[i] << "\n";
    for (const Edge& e : inst.net.edges()) out << "e " << e.u << " " << e.v << " " << e.w << "\n";
    if (inst.x0) out << "x0 " << inst.x0->to_string() << "\n";
    if (inst.intervention) {
        for (int s : inst.intervention->seeds) out << "seed " << s << "\n";
        if (inst.intervention->mode.kind == SeedingMode::Kind::Temporary)
            out << "mode temporary\n";
        else
            out << "mode fixed " << inst.intervention->mode.duration << "\n";
    }
    return out.str();
}

uint64_t instance_hash(const Instance& inst) {
    std::string s = serialize_instance(inst);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string instance_hash_hex(const Instance& inst) {
    uint64_t h = instance_hash(inst);
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

ParsedCover parse_setcover(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    int universe = -1;
    std::optional<int> budget;
    std::vector<std::vector<int>> subsets;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        auto toks = split_ws(line);

        if (toks[0] == "universe") {
            if (universe >= 0) throw ParseError(lineno, "duplicate universe line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: universe <n>");
            universe = want_int(toks[1], lineno, "universe size");
            if (universe < 1) throw ParseError(lineno, "universe size must be >= 1");
            continue;
        }
        if (toks[0] == "budget") {
            if (budget) throw ParseError(lineno, "duplicate budget line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: budget <k>");
            int k = want_int(toks[1], lineno, "budget");
            if (k < 0) throw ParseError(lineno, "budget must be >= 0");
            budget = k;
            continue;
        }
        if (universe < 0) throw ParseError(lineno, "universe line must come first");
        std::vector<int> subset;
        for (const auto& t : toks) {
            int id = want_int(t, lineno, "element id");
            if (id < 0 || id >= universe) throw ParseError(lineno, "element id out of range");
            subset.push_back(id);
        }
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        subsets.push_back(std::move(subset));
    }
    if (universe < 0) throw ParseError(lineno, "missing universe line");

    ParsedCover pc;
    pc.cover.universe_size = universe;
    pc.cover.subsets = std::move(subsets);
    pc.budget = budget;
    return pc;
}

std::string serialize_setcover(const SetCoverInstance& sc, std::optional<int> budget) {
    std::ostringstream out;
    out << "universe " << sc.universe_size << "\n";
    if (budget) out << "budget " << *budget << "\n";
    for (const auto& subset : sc.subsets) {
        for (size_t i = 0; i < subset.size(); ++i) out << (i ? " " : "") << subset[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace threshnet
