#include "tropical/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace trop::report {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return s.str();
}

std::string vec_text(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string vec_text(const IntVec& v) { return vec_text(to_rational(v)); }

ojson vec_json(const Vec& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

namespace {

std::string node_text(const BinaryTree& t, int i) {
    const auto& nd = t.nodes[i];
    if (nd.leaf()) return std::to_string(nd.label);
    return "(" + node_text(t, nd.left) + "," + node_text(t, nd.right) + ")";
}

}  // namespace

std::string tree_text(const BinaryTree& t) { return t.root < 0 ? "()" : node_text(t, t.root); }

ojson tree_json(const BinaryTree& t) {
    ojson j;
    j["newick"] = tree_text(t);
    j["clusters"] = t.clusters();
    return j;
}

ojson obstruction_json(const ObstructionReport& r, const AbstractGraph& g, int n, bool with_basis) {
    ojson j;
    j["method"] = r.method;
    j["dimH"] = r.dimH;
    j["paramDim"] = r.paramDim;
    j["superabundant"] = r.superabundantDef1;
    j["typeLevel"] = r.typeLevel;
    if (r.abundancyRank) j["abundancyRank"] = *r.abundancyRank;
    if (r.superabundantDef2) j["superabundantDef2"] = *r.superabundantDef2;
    if (!r.chains.empty()) {
        ojson chains = ojson::array();
        for (const auto& c : r.chains) {
            ojson b = ojson::array();
            for (const auto& v : c.perp.basis()) b.push_back(vec_json(v));
            chains.push_back({{"edges", c.edges}, {"perp", b}});
        }
        j["chains"] = chains;
    }
    if (with_basis) {
        ojson basis = ojson::array();
        for (const auto& x : r.space.basis()) {
            ojson gen = ojson::object();
            for (std::size_t f = 0; f < g.num_flags(); ++f) {
                Vec w(x.begin() + f * n, x.begin() + (f + 1) * n);
                if (is_zero(w)) continue;
                Flag fl = g.flag_name(f);
                gen[fl.vertex + "/" + fl.edge] = vec_json(w);
            }
            basis.push_back(gen);
        }
        j["basis"] = basis;
    }
    return j;
}

std::string obstruction_text(const ObstructionReport& r, const AbstractGraph& g, int n, bool with_basis) {
    std::ostringstream s;
    s << "method: " << r.method << "\n";
    s << "dimH: " << r.dimH << "\n";
    s << "paramDim: " << r.paramDim << "\n";
    s << "superabundant: " << (r.superabundantDef1 ? "yes" : "no") << "\n";
    if (r.typeLevel) s << "note: computed for the combinatorial type, the input is not immersive\n";
    for (std::size_t i = 0; i < r.chains.size(); ++i) {
        s << "chain " << i + 1 << ":";
        for (const auto& e : r.chains[i].edges) s << " " << e;
        s << "  perp:";
        for (const auto& v : r.chains[i].perp.basis()) s << " " << vec_text(v);
        s << "\n";
    }
    if (with_basis && r.dimH > 0) {
        const auto& B = r.space.basis();
        s << "basis (flag: generator 1, generator 2, ...):\n";
        for (std::size_t f = 0; f < g.num_flags(); ++f) {
            bool any = false;
            std::string row;
            for (std::size_t k = 0; k < B.size(); ++k) {
                Vec w(B[k].begin() + f * n, B[k].begin() + (f + 1) * n);
                any = any || !is_zero(w);
                row += (k ? "  " : "") + vec_text(w);
            }
            if (!any) continue;
            Flag fl = g.flag_name(f);
            s << "  " << fl.vertex << "/" << fl.edge << ": " << row << "\n";
        }
    }
    return s.str();
}

}  // namespace trop::report
