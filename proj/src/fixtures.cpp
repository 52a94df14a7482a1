#include "gsys/fixtures.hpp"

#include <sstream>

namespace gsys {

namespace {

const char* kHeisenberg = R"(# Heisenberg group with the central direction gauged
system heisenberg;
coords x y z;
vector X = (1, 0, -1/2*y);
vector Y = (0, 1, 1/2*x);
gauge Z = (0, 0, 1);
bivector P = wedge(X, Y);
dynamics V = y*d/dx - x*d/dy;
bounds max_res 3 deg 3;
check master;
check jacobi;
check projectible P;
check projectible V;
)";

std::string contact_text(int n) {
    std::ostringstream os;
    os << "# contact manifold of dimension " << (2 * n + 1)
       << " as a Jacobi structure\n";
    os << "system contact-" << n << ";\n";
    os << "coords t";
    for (int i = 1; i <= n; ++i) os << " q" << i;
    for (int i = 1; i <= n; ++i) os << " p" << i;
    os << ";\n";
    for (int i = 1; i <= n; ++i)
        os << "vector A" << i << " = d/dq" << i << " + p" << i << "*d/dt;\n";
    for (int i = 1; i <= n; ++i) os << "vector B" << i << " = d/dp" << i << ";\n";
    os << "gauge R = d/dt;\n";
    os << "bivector P = ";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) os << " + ";
        os << "wedge(A" << i << ", B" << i << ")";
    }
    os << ";\n";
    os << "dynamics V = ";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) os << " + ";
        os << "q" << i << "*d/dq" << i << " - p" << i << "*d/dp" << i;
    }
    os << ";\n";
    os << "bounds max_res 3 deg 3;\n";
    os << "check master;\ncheck jacobi;\ncheck projectible P;\n"
          "check projectible V;\n";
    return os.str();
}

// Invertible upper triangular n x n matrices; the strictly upper part is
// gauged by left-invariant vector fields; P is built from two diagonal
// directions and V from the last-column direction.
std::string triangular_text(int n) {
    std::ostringstream os;
    auto gname = [](int i, int j) {
        return "g" + std::to_string(i) + std::to_string(j);
    };
    os << "# invertible upper triangular " << n << "x" << n
       << " matrices, derived subalgebra gauged\n";
    os << "system triangular-" << n << ";\n";
    os << "coords";
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) os << " " << gname(i, j);
    os << ";\n";
    // left-invariant field of E_{kl}: sum_{i<=k} g_{ik} d/d g_{il}
    auto invariant_field = [&](int k, int l) {
        std::ostringstream f;
        for (int i = 1; i <= k; ++i) {
            if (i > 1) f << " + ";
            f << gname(i, k) << "*d/d" << gname(i, l);
        }
        return f.str();
    };
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            os << "gauge R" << k << l << " = " << invariant_field(k, l) << ";\n";
    os << "vector D1 = " << invariant_field(1, 1) << ";\n";
    os << "vector D2 = " << invariant_field(2, 2) << ";\n";
    os << "bivector P = wedge(D1, D2);\n";
    os << "dynamics V = " << invariant_field(n, n) << ";\n";
    // [E_kl, E_mp] = delta_{lm} E_kp - delta_{pk} E_ml
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
                for (int p = m + 1; p <= n; ++p) {
                    if (std::make_pair(k, l) > std::make_pair(m, p)) continue;
                    std::ostringstream rhs;
                    bool any = false;
                    if (l == m) {
                        rhs << "R" << k << p;
                        any = true;
                    }
                    if (p == k) {
                        if (any) rhs << " - R" << m << l;
                        else rhs << "-R" << m << l;
                        any = true;
                    }
                    os << "witness R" << k << l << " R" << m << p << " = "
                       << (any ? rhs.str() : "0") << ";\n";
                }
    os << "bounds max_res 3 deg 3;\n";
    os << "check jacobi;\ncheck projectible P;\ncheck projectible V;\n";
    return os.str();
}

} // namespace

std::optional<std::string> fixture_text(const std::string& name, int n) {
    auto parse_suffix = [&](const std::string& prefix) -> std::optional<int> {
        if (name == prefix) return n > 0 ? n : std::optional<int>();
        if (name.rfind(prefix + "-", 0) == 0) {
            try {
                int k = std::stoi(name.substr(prefix.size() + 1));
                return k > 0 ? std::optional<int>(k) : std::nullopt;
            } catch (...) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    };
    if (name == "heisenberg") return std::string(kHeisenberg);
    if (name == "contact") return contact_text(n > 0 ? n : 1);
    if (auto k = parse_suffix("contact")) return contact_text(*k);
    if (name == "triangular") return triangular_text(n > 0 ? n : 3);
    if (auto k = parse_suffix("triangular"))
        return *k >= 2 ? std::optional<std::string>(triangular_text(*k))
                       : std::nullopt;
    return std::nullopt;
}

std::vector<std::string> fixture_names() {
    return {"heisenberg", "contact-1", "contact-2", "contact-3",
            "triangular-2", "triangular-3"};
}

} // namespace gsys
