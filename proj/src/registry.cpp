#include <cstdlib>
#include <set>

#include "eulerwaves/catalogue.hpp"

namespace eulerwaves {

namespace {

std::vector<ParamSpec> with_amplitude(std::vector<ParamSpec> p) {
    p.push_back({"rho", "real", "1", "amplitude"});
    p.push_back({"sigma", "real", "0", "phase offset"});
    return p;
}

int parse_int(const std::string& name, const std::string& s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0') throw ArgumentError("parameter " + name + ": expected an integer, got '" + s + "'");
    return static_cast<int>(v);
}

double parse_real(const std::string& name, const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw ArgumentError("parameter " + name + ": expected a number, got '" + s + "'");
    return v;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue_entries() {
    static const std::vector<CatalogueEntry> entries = {
        {"kelvin-torus", "Kelvin waves on the flat two-torus", "kelvin-torus n m",
         with_amplitude({{"n", "int", "1", "x wavenumber"}, {"m", "int", "2", "y wavenumber"}})},
        {"kelvin-disk", "Kelvin waves on the flat disk", "kelvin-disk n m",
         with_amplitude({{"n", "int", "1", "angular wavenumber"}, {"m", "int", "1", "Bessel zero index"}})},
        {"rossby-sphere", "Rossby-Haurwitz waves on the round two-sphere", "rossby-sphere n m",
         with_amplitude({{"n", "int", "1", "order, |n| <= m"}, {"m", "int", "2", "degree"}})},
        {"kelvin-hyperbolic", "Kelvin waves on a compact disk in hyperbolic space", "kelvin-hyperbolic n m",
         with_amplitude({{"n", "int", "1", "angular wavenumber"}, {"m", "int", "1", "radial mode index"}})},
        {"rossby-s3", "Generalized Rossby-Haurwitz waves on the round three-sphere", "rossby-s3 j k d sign",
         with_amplitude({{"j", "int", "1", "theta wavenumber"},
                         {"k", "int", "0", "phi wavenumber"},
                         {"d", "int", "0", "Jacobi degree"},
                         {"sign", "int", "-1", "curl branch, +1 or -1"}})},
        {"ck-cylinder", "Chandrasekhar-Kendall modes on the solid cylinder", "ck-cylinder n m [branch]",
         with_amplitude({{"n", "int", "1", "theta wavenumber"},
                         {"m", "int", "1", "z wavenumber"},
                         {"branch", "int", "1", "dispersion root index"}})},
        {"twisted-annulus", "Twisted warped metric (c != 0) on a solid torus", "twisted-annulus m [c a b]",
         with_amplitude({{"m", "int", "1", "z wavenumber"},
                         {"c", "real", "-0.3", "twist"},
                         {"a", "real", "2.0943951023931953", "inner radius"},
                         {"b", "real", "6.2831853071795862", "outer radius"},
                         {"n", "int", "0", "theta wavenumber"},
                         {"branch", "int", "1", "alpha root index"}})},
    };
    return entries;
}

const CatalogueEntry& catalogue_entry(const std::string& key) {
    for (const auto& e : catalogue_entries())
        if (e.key == key) return e;
    throw ArgumentError("unknown solution key '" + key + "'");
}

ExactSolution make_solution(const std::string& key, const ParamMap& params) {
    const CatalogueEntry& entry = catalogue_entry(key);
    std::set<std::string> known;
    for (const auto& p : entry.params) known.insert(p.name);
    for (const auto& [k, v] : params)
        if (!known.count(k)) throw ArgumentError("unknown parameter '" + k + "' for " + key + " (usage: " + entry.usage + ")");
    auto get = [&](const std::string& name) {
        auto it = params.find(name);
        if (it != params.end()) return it->second;
        for (const auto& p : entry.params)
            if (p.name == name) return p.default_value;
        throw ArgumentError("missing parameter " + name);
    };
    auto gi = [&](const std::string& name) { return parse_int(name, get(name)); };
    auto gr = [&](const std::string& name) { return parse_real(name, get(name)); };

    ExactSolution s;
    if (key == "kelvin-torus")
        s = kelvin_torus(gi("n"), gi("m"));
    else if (key == "kelvin-disk")
        s = kelvin_disk(gi("n"), gi("m"));
    else if (key == "rossby-sphere")
        s = rossby_sphere(gi("n"), gi("m"));
    else if (key == "kelvin-hyperbolic")
        s = kelvin_hyperbolic(gi("n"), gi("m"));
    else if (key == "rossby-s3")
        s = rossby_s3(gi("j"), gi("k"), gi("d"), gi("sign"));
    else if (key == "ck-cylinder")
        s = ck_cylinder(gi("n"), gi("m"), gi("branch"));
    else {
        TwistedParams tp;
        tp.m = gi("m");
        tp.n = gi("n");
        tp.c = gr("c");
        tp.a = gr("a");
        tp.b = gr("b");
        tp.branch = gi("branch");
        s = twisted_annulus(tp);
    }
    return s.with_amplitude(gr("rho"), gr("sigma"));
}

}  // namespace eulerwaves
