#include "clusterforge/catalog.hpp"

#include "clusterforge/error.hpp"

#include <map>
#include <regex>

namespace cf::catalog {

namespace {

// Builds a quiver from named vertices; `arrows` lists (tail, head, multiplicity).
Quiver labelled(const std::vector<std::string>& names,
                const std::vector<std::tuple<std::string, std::string, int>>& arrows) {
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<int>(i);
    std::vector<Arrow> list;
    for (const auto& [t, h, m] : arrows) list.push_back({id.at(t), id.at(h), m});
    Quiver q = Quiver::from_arrows(static_cast<int>(names.size()), list);
    q.set_labels(names);
    return q;
}

}  // namespace

Quiver linear_a(int n) {
    std::vector<Arrow> a;
    for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1, 1});
    return Quiver::from_arrows(n, a);
}

Quiver type_d(int n) {
    if (n < 4) throw Error(Errc::InvalidQuiver, "type D needs n >= 4");
    // 1 -> 3, 2 -> 3, 3 -> 4 -> ... -> n
    std::vector<Arrow> a{{0, 2, 1}, {1, 2, 1}};
    for (int i = 2; i + 1 < n; ++i) a.push_back({i, i + 1, 1});
    return Quiver::from_arrows(n, a);
}

Quiver type_e(int n) {
    std::vector<std::string> names{"c", "l1", "l2", "u1", "r1", "r2"};
    std::vector<std::tuple<std::string, std::string, int>> a{
        {"l2", "l1", 1}, {"l1", "c", 1}, {"u1", "c", 1}, {"r2", "r1", 1}, {"r1", "c", 1}};
    if (n < 6 || n > 8) throw Error(Errc::InvalidQuiver, "type E needs n in 6..8");
    if (n >= 7) {
        names.push_back("r3");
        a.emplace_back("r3", "r2", 1);
    }
    if (n == 8) {
        names.push_back("r4");
        a.emplace_back("r4", "r3", 1);
    }
    return labelled(names, a);
}

Quiver affine_e(int n) {
    if (n == 6)
        return labelled({"c", "l1", "l2", "u1", "u2", "r1", "r2"},
                        {{"l2", "l1", 1}, {"l1", "c", 1}, {"u1", "c", 1}, {"r2", "r1", 1},
                         {"r1", "c", 1}, {"u2", "u1", 1}});
    if (n == 7)
        return labelled({"c", "l1", "l2", "l3", "u1", "r1", "r2", "r3"},
                        {{"l3", "l2", 1}, {"l2", "l1", 1}, {"l1", "c", 1}, {"u1", "c", 1},
                         {"r3", "r2", 1}, {"r2", "r1", 1}, {"r1", "c", 1}});
    if (n == 8)
        return labelled({"c", "l1", "l2", "u1", "r1", "r2", "r3", "r4", "r5"},
                        {{"l2", "l1", 1}, {"l1", "c", 1}, {"u1", "c", 1}, {"r2", "r1", 1},
                         {"r1", "c", 1}, {"r3", "r2", 1}, {"r4", "r3", 1}, {"r5", "r4", 1}});
    throw Error(Errc::InvalidQuiver, "affine E needs n in 6..8");
}

Quiver elliptic_e(int n) {
    if (n == 6)
        return labelled({"l1", "l2", "u", "d", "r1", "r2", "r3", "r4"},
                        {{"l2", "l1", 1}, {"u", "l1", 1}, {"l1", "d", 1}, {"u", "r1", 1},
                         {"r1", "d", 1}, {"d", "u", 2}, {"r2", "r1", 1}, {"r4", "r3", 1},
                         {"u", "r3", 1}, {"r3", "d", 1}});
    if (n == 7)
        return labelled({"l1", "l2", "l3", "u", "d", "r1", "r2", "r3", "r4"},
                        {{"l3", "l2", 1}, {"l2", "l1", 1}, {"u", "l1", 1}, {"l1", "d", 1},
                         {"u", "r1", 1}, {"r1", "d", 1}, {"d", "u", 2}, {"r3", "r2", 1},
                         {"r4", "r3", 1}, {"u", "r2", 1}, {"r2", "d", 1}});
    if (n == 8)
        return labelled({"l1", "l2", "u", "d", "r1", "r2", "r3", "r4", "r5", "r6"},
                        {{"l2", "l1", 1}, {"u", "l1", 1}, {"l1", "d", 1}, {"u", "r1", 1},
                         {"r1", "d", 1}, {"d", "u", 2}, {"r3", "r2", 1}, {"r4", "r3", 1},
                         {"u", "r2", 1}, {"r2", "d", 1}, {"r5", "r4", 1}, {"r6", "r5", 1}});
    throw Error(Errc::InvalidQuiver, "elliptic E needs n in 6..8");
}

Quiver kronecker(int m) { return Quiver::from_arrows(2, {{0, 1, m}}); }

Quiver oriented_cycle(int n) {
    std::vector<Arrow> a;
    for (int i = 0; i < n; ++i) a.push_back({i, (i + 1) % n, 1});
    return Quiver::from_arrows(n, a);
}

Quiver x6() {
    return labelled({"c", "l", "lu", "r", "ru", "d"},
                    {{"c", "l", 1}, {"lu", "c", 1}, {"c", "ru", 1}, {"r", "c", 1}, {"d", "c", 1},
                     {"l", "lu", 2}, {"ru", "r", 2}});
}

Quiver x7() {
    return labelled({"c", "l", "lu", "r", "ru", "dl", "dr"},
                    {{"c", "l", 1}, {"lu", "c", 1}, {"c", "ru", 1}, {"r", "c", 1}, {"c", "dr", 1},
                     {"dl", "c", 1}, {"l", "lu", 2}, {"ru", "r", 2}, {"dr", "dl", 2}});
}

Quiver markov() { return Quiver::from_arrows(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}); }

Quiver t2() {
    // 1 => 2, 3 -> 1, 3 -> 4, 4 -> 1, 2 -> 3, 2 -> 4
    return Quiver::from_arrows(4, {{0, 1, 2}, {2, 0, 1}, {2, 3, 1}, {3, 0, 1}, {1, 2, 1}, {1, 3, 1}});
}

const std::vector<std::pair<std::string, Quiver>>& exceptional_quivers() {
    static const std::vector<std::pair<std::string, Quiver>> table{
        {"X6", x6()},
        {"X7", x7()},
        {"E6^(1,1)", elliptic_e(6)},
        {"E7^(1,1)", elliptic_e(7)},
        {"E8^(1,1)", elliptic_e(8)},
    };
    return table;
}

Quiver by_name(const std::string& name) {
    std::smatch m;
    static const std::regex simple(R"(([ADEK])(\d+))");
    static const std::regex affine(R"(E(\d)\^\(1\))");
    static const std::regex elliptic(R"(E(\d)\^\(1,1\))");
    if (std::regex_match(name, m, simple)) {
        const int n = std::stoi(m[2]);
        switch (name[0]) {
            case 'A': if (n >= 1) return linear_a(n); break;
            case 'D': if (n >= 4) return type_d(n); break;
            case 'E': if (n >= 6 && n <= 8) return type_e(n); break;
            case 'K': if (n >= 1) return kronecker(n); break;
        }
    } else if (std::regex_match(name, m, affine)) {
        const int n = std::stoi(m[1]);
        if (n >= 6 && n <= 8) return affine_e(n);
    } else if (std::regex_match(name, m, elliptic)) {
        const int n = std::stoi(m[1]);
        if (n >= 6 && n <= 8) return elliptic_e(n);
    } else if (name == "X6") {
        return x6();
    } else if (name == "X7") {
        return x7();
    } else if (name == "markov" || name == "T1") {
        return markov();
    } else if (name == "T2") {
        return t2();
    } else if (name == "cycle3") {
        return oriented_cycle(3);
    }
    throw Error(Errc::ParseError, "unknown quiver name '" + name + "'");
}

}  // namespace cf::catalog
