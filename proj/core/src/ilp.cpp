#include "romank/ilp.hpp"

#include <sstream>

namespace romank {

namespace {

std::string xvar(int v, int i) { return "x_" + std::to_string(v) + "_" + std::to_string(i); }
std::string zvar(int u) { return "z_" + std::to_string(u); }

// Appends "c x_v_i" terms (skipping zero coefficients) for i in [lo, k].
void value_terms(std::ostringstream& out, int v, int lo, int k, bool& lead) {
    for (int i = std::max(lo, 1); i <= k; ++i) {
        out << (lead ? " " : " + ") << i << " " << xvar(v, i);
        lead = false;
    }
}

}  // namespace

std::string export_ilp(const Graph& g, int k, Variant variant) {
    if (k < 1 || k > kMaxK) throw std::invalid_argument("export_ilp: k out of range");
    if (g.vertex_count() == 0) throw std::invalid_argument("export_ilp: empty graph");
    const int n = g.vertex_count();
    const bool strong = variant == Variant::strong || variant == Variant::perfect_strong;
    const bool exact = variant == Variant::perfect || variant == Variant::perfect_strong;

    std::ostringstream out;
    out << "\\ " << to_string(variant) << " roman " << k << "-domination, " << n
        << " vertices\n";
    out << "Minimize\n obj:";
    bool lead = true;
    for (int v = 0; v < n; ++v) value_terms(out, v, 0, k, lead);
    out << "\nSubject To\n";

    for (int v = 0; v < n; ++v) {
        out << " assign_" << v << ":";
        for (int i = 0; i <= k; ++i) out << (i ? " + " : " ") << xvar(v, i);
        out << " = 1\n";
    }

    // z_u equals the low indicator: sum of x_u_i over 2i <= k-1.
    for (int u = 0; u < n; ++u) {
        out << " low_" << u << ": " << zvar(u);
        for (int i = 0; 2 * i <= k - 1; ++i) out << " - " << xvar(u, i);
        out << " = 0\n";
    }

    for (int u = 0; u < n; ++u) {
        if (g.is_isolated(u)) {
            out << " pin_" << u << ": " << xvar(u, k) << " = 1\n";
            continue;
        }
        const long long big_m = static_cast<long long>(k) * (g.degree(u) + 1);
        out << " cover_" << u << ":";
        lead = true;
        if (strong) {
            value_terms(out, u, 0, k, lead);
            for (int v : g.neighbors(u)) value_terms(out, v, k / 2 + 1, k, lead);
        } else {
            value_terms(out, u, 0, k, lead);
            for (int v : g.neighbors(u)) value_terms(out, v, 0, k, lead);
        }
        out << " - " << k << " " << zvar(u) << " >= 0\n";
        if (exact) {
            out << " exact_" << u << ":";
            lead = true;
            if (strong) {
                value_terms(out, u, 0, k, lead);
                for (int v : g.neighbors(u)) value_terms(out, v, k / 2 + 1, k, lead);
            } else {
                value_terms(out, u, 0, k, lead);
                for (int v : g.neighbors(u)) value_terms(out, v, 0, k, lead);
            }
            out << " + " << big_m << " " << zvar(u) << " <= " << k + big_m << "\n";
        }
    }

    out << "Binary\n";
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= k; ++i) out << " " << xvar(v, i) << "\n";
    for (int u = 0; u < n; ++u) out << " " << zvar(u) << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace romank
